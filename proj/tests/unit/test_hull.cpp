#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ccsmooth/hull.hpp"
#include "test_util.hpp"

using namespace ccsmooth;

namespace {

// O(n^3) reference: an interior index is a lower-hull vertex iff it lies
// strictly below every chord that straddles it.
std::vector<std::size_t> brute_lower_hull(const DataSeries& d, std::size_t r, std::size_t s,
                                          double sign) {
  std::vector<std::size_t> out{r};
  for (std::size_t j = r + 1; j < s; ++j) {
    bool vertex = true;
    for (std::size_t i = r; i < j && vertex; ++i) {
      for (std::size_t k = j + 1; k <= s && vertex; ++k) {
        const double fi = sign * d.f(i), fj = sign * d.f(j), fk = sign * d.f(k);
        const double cross = (d.x(k) - d.x(i)) * (fj - fi) - (d.x(j) - d.x(i)) * (fk - fi);
        if (cross >= 0) vertex = false;
      }
    }
    if (vertex) out.push_back(j);
  }
  if (s > r) out.push_back(s);
  return out;
}

}  // namespace

TEST(NeighboursTest, Examples) {
  const VertexSet I{0, 4, {0, 2, 4}, Sign::Plus};
  EXPECT_EQ(neighbours(3, I), (std::pair<std::size_t, std::size_t>{2, 4}));
  EXPECT_EQ(neighbours(4, I), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(neighbours(0, I), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(neighbours(2, I), (std::pair<std::size_t, std::size_t>{0, 4}));
}

TEST(NeighboursTest, ExtrapolationNeedsTwoVertices) {
  const VertexSet I{3, 3, {3}, Sign::Plus};
  EXPECT_THROW(neighbours(3, I), ArgumentError);
}

TEST(InterpolantTest, Examples) {
  const auto d3 = DataSeries::equally_spaced({0, 1, 0});
  EXPECT_EQ(interpolant(d3, VertexSet{0, 2, {0, 2}, Sign::Plus}, std::vector<double>{0, 0}),
            (std::vector<double>{0, 0, 0}));
  const auto d4 = DataSeries::equally_spaced({0, 1, 0, 1});
  EXPECT_EQ(interpolant(d4, VertexSet{0, 3, {0, 2, 3}, Sign::Plus}, std::vector<double>{0, 0, 1}),
            (std::vector<double>{0, 0, 0, 1}));
  EXPECT_EQ(interpolant(d4, VertexSet{0, 3, {0, 1, 2, 3}, Sign::Plus},
                        std::vector<double>{4, 3, 2, 5}),
            (std::vector<double>{4, 3, 2, 5}));
}

TEST(OptimalVertexSetTest, Examples) {
  const auto d = DataSeries::equally_spaced({0, 1, 0});
  EXPECT_EQ(optimal_vertex_set(d, 0, 2, Sign::Plus).indices, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(optimal_vertex_set(d, 0, 2, Sign::Minus).indices,
            (std::vector<std::size_t>{0, 1, 2}));
  const auto d5 = DataSeries::equally_spaced({3, -1, 4, 1, 5});
  for (std::size_t r = 0; r + 1 < 5; ++r) {
    EXPECT_EQ(optimal_vertex_set(d5, r, r + 1, Sign::Plus).indices,
              (std::vector<std::size_t>{r, r + 1}));
  }
  EXPECT_THROW(optimal_vertex_set(d5, 3, 2, Sign::Plus), ArgumentError);
}

TEST(OptimalVertexSetTest, CollinearPointsAreDropped) {
  const auto d = DataSeries::equally_spaced({0, 1, 2, 3, 4});
  EXPECT_EQ(optimal_vertex_set(d, 0, 4, Sign::Plus).indices, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(optimal_vertex_set(d, 0, 4, Sign::Minus).indices, (std::vector<std::size_t>{0, 4}));
}

TEST(OptimalVertexSetTest, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = 2 + rng() % 14;
    const DataSeries d = it % 2 ? testutil::random_series(rng, n)
                                : testutil::random_integer_series(rng, n, 4);
    const std::size_t r = rng() % (n - 1);
    const std::size_t s = r + 1 + rng() % (n - 1 - r);
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      EXPECT_EQ(optimal_vertex_set(d, r, s, sg).indices,
                brute_lower_hull(d, r, s, to_double(sg)))
          << "it=" << it;
    }
  }
}

TEST(OptimalVertexSetTest, NegationSwapsUpperAndLower) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const DataSeries d = testutil::random_series(rng, 3 + rng() % 20);
    const DataSeries neg = d.negated();
    const std::size_t n = d.size();
    EXPECT_EQ(optimal_vertex_set(d, 0, n - 1, Sign::Minus).indices,
              optimal_vertex_set(neg, 0, n - 1, Sign::Plus).indices);
    EXPECT_DOUBLE_EQ(price(d, 0, n - 1, Sign::Minus), price(neg, 0, n - 1, Sign::Plus));
  }
}

TEST(OptimalVertexSetTest, LinearOperationCount) {
  std::mt19937_64 rng(41);
  for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
    const DataSeries d = testutil::random_series(rng, n);
    OpCounter ops;
    optimal_vertex_set(d, 0, n - 1, Sign::Plus, &ops);
    EXPECT_LE(ops.count, 2 * n);
  }
}

TEST(PriceTest, Examples) {
  EXPECT_EQ(price(DataSeries::equally_spaced({0, 0, 1}), 0, 2, Sign::Plus), 0.0);
  EXPECT_EQ(price(DataSeries::equally_spaced({0, 1, 0}), 0, 2, Sign::Plus), 0.5);
  const auto d = DataSeries::equally_spaced({5, -3, 8, 1});
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(price(d, r, r + 1, Sign::Plus), 0.0);
}

TEST(PriceTest, CriticalIndexIsLowestMaximiser) {
  // Two equal bumps: the first one must be reported.
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1, 0});
  const PriceDetail p = price_detail(d, 0, 4, Sign::Plus);
  EXPECT_EQ(p.h, 0.5);
  EXPECT_EQ(p.j_star, 1u);
  // The middle zero lies on the chord, so it is not a vertex.
  EXPECT_EQ(p.k, 0u);
  EXPECT_EQ(p.k_plus, 4u);
}

TEST(BestConvexTest, Examples) {
  auto a = best_convex_approximation(DataSeries::equally_spaced({0, 1, 0}), Sign::Plus);
  EXPECT_EQ(a.h, 0.5);
  EXPECT_EQ(a.y, (std::vector<double>{0.5, 0.5, 0.5}));

  a = best_convex_approximation(DataSeries::equally_spaced({0, 1, 0, 1}), Sign::Plus);
  EXPECT_EQ(a.h, 0.5);
  EXPECT_EQ(a.vertex_set.indices, (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(a.y, (std::vector<double>{0.5, 0.5, 0.5, 1.5}));

  const std::vector<double> convex{4, 1, 0, 1, 4, 9};
  a = best_convex_approximation(DataSeries::equally_spaced(convex), Sign::Plus);
  EXPECT_EQ(a.h, 0.0);
  EXPECT_EQ(a.y, convex);
}

// The raised hull interpolant is convex (concave), attains h, and no point
// is further than h from it.
TEST(BestConvexTest, RaisedHullIsFeasibleAtItsPrice) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    const DataSeries d = testutil::random_series(rng, 3 + rng() % 40);
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      const auto a = best_convex_approximation(d, sg);
      EXPECT_TRUE(is_feasible(d, a.y, 0, Orientation{sg}));
      EXPECT_NEAR(linf_distance(a.y, d.f()), a.h, 1e-12);
    }
  }
}
