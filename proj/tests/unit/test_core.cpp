#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ccsmooth/core.hpp"

using namespace ccsmooth;

TEST(DataSeriesTest, RejectsBadInput) {
  EXPECT_THROW(DataSeries({0, 1}, {0}), ArgumentError);
  EXPECT_THROW(DataSeries({}, {}), ArgumentError);
  EXPECT_THROW(DataSeries({0, 0}, {1, 2}), ArgumentError);
  EXPECT_THROW(DataSeries({1, 0}, {1, 2}), ArgumentError);
  EXPECT_THROW(DataSeries({0, 1}, {1, std::nan("")}), ArgumentError);
  EXPECT_NO_THROW(DataSeries({0}, {5}));
}

TEST(DataSeriesTest, Scale) {
  EXPECT_DOUBLE_EQ(DataSeries::equally_spaced({0.1, -0.2}).scale(), 1.0);
  EXPECT_DOUBLE_EQ(DataSeries::equally_spaced({3, -7}).scale(), 7.0);
}

TEST(DividedDifferenceTest, HandValues) {
  const std::vector<double> x3{0, 1, 2};
  EXPECT_DOUBLE_EQ(second_divided_difference(std::vector<double>{0, 0, 0}, x3, 0, 1, 2), 0.0);
  EXPECT_DOUBLE_EQ(second_divided_difference(std::vector<double>{0, 1, 0}, x3, 0, 1, 2), -1.0);
  const std::vector<double> x4{0, 1, 2, 3};
  EXPECT_DOUBLE_EQ(second_divided_difference(std::vector<double>{0, 1, 0, 1}, x4, 1, 2, 3), 1.0);
}

TEST(DividedDifferenceTest, IndexOrderViolation) {
  const std::vector<double> x{0, 1, 2};
  const std::vector<double> v{0, 1, 0};
  EXPECT_THROW(second_divided_difference(v, x, 1, 0, 2), ArgumentError);
  EXPECT_THROW(second_divided_difference(v, x, 0, 1, 3), ArgumentError);
}

TEST(DividedDifferenceTest, ChordDeviationHasOppositeSign) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::vector<double> x{0, 0.3, 1.7};
  for (int it = 0; it < 100; ++it) {
    const std::vector<double> v{u(rng), u(rng), u(rng)};
    const double c = second_divided_difference(v, x, 0, 1, 2);
    const double dev = chord_deviation(v, x, 0, 1, 2);
    EXPECT_LE(c * dev, 0.0);
  }
}

TEST(ConsecutiveDifferencesTest, Examples) {
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1});
  const std::vector<double> v{0, 1, 0, 1};
  EXPECT_EQ(consecutive_differences(d, v), (std::vector<double>{-1, 1}));

  const auto d3 = DataSeries::equally_spaced({0, 0, 1});
  EXPECT_EQ(consecutive_differences(d3, std::vector<double>{0, 0, 1}), std::vector<double>{0.5});

  const DataSeries d5({0, 0.5, 2, 3, 7}, {0, 0, 0, 0, 0});
  std::vector<double> affine;
  for (double xv : d5.x()) affine.push_back(3 * xv - 2);
  for (double c : consecutive_differences(d5, affine)) EXPECT_NEAR(c, 0.0, 1e-14);

  EXPECT_TRUE(consecutive_differences(DataSeries::equally_spaced({1, 2}),
                                      std::vector<double>{1, 2})
                  .empty());
}

TEST(SignChangesTest, Examples) {
  EXPECT_EQ(count_sign_changes(std::vector<double>{}, Sign::Plus), 0);
  EXPECT_EQ(count_sign_changes(std::vector<double>{-1, 1}, Sign::Plus), 2);
  EXPECT_EQ(count_sign_changes(std::vector<double>{0, 0, -3}, Sign::Plus), 1);
  EXPECT_EQ(count_sign_changes(std::vector<double>{-1, 1}, Sign::Minus), 1);
}

TEST(SignChangesTest, ZerosAreTransparent) {
  EXPECT_EQ(count_sign_changes(std::vector<double>{1, 0, 0, 1}, Sign::Plus), 0);
  EXPECT_EQ(count_sign_changes(std::vector<double>{1, 0, -1, 0, 0, -1}, Sign::Plus), 1);
  EXPECT_EQ(count_sign_changes(std::vector<double>{0, 0, 0}, Sign::Minus), 0);
  EXPECT_EQ(count_sign_changes(std::vector<double>{1e-13, -1}, Sign::Plus, 1e-12), 1);
}

TEST(FeasibilityTest, Examples) {
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1});
  const std::vector<double> v{0, 1, 0, 1};
  EXPECT_FALSE(is_feasible(d, v, 1, Orientation::convex_first()));
  EXPECT_TRUE(is_feasible(d, v, 2, Orientation::convex_first()));
  EXPECT_TRUE(is_feasible(d, v, 1, Orientation::concave_first()));
  EXPECT_THROW(is_feasible(d, v, -1, Orientation::convex_first()), ArgumentError);

  const std::vector<double> line{2, 1, 0, -1};
  for (int q = 0; q < 3; ++q) {
    EXPECT_TRUE(is_feasible(d, line, q, Orientation::convex_first()));
    EXPECT_TRUE(is_feasible(d, line, q, Orientation::concave_first()));
  }
}

TEST(FeasibilityTest, RoundingOnAffineDataIsNotACurvature) {
  // 0.1 steps are not exact in binary; the deviation is pure rounding.
  std::vector<double> x, v;
  for (int j = 0; j < 50; ++j) {
    x.push_back(0.1 * j);
    v.push_back(1e3 * 0.1 * j + 7);
  }
  const DataSeries d(x, v);
  EXPECT_EQ(count_curvature_changes(d, v, Sign::Plus, Tolerance{}.absolute(d)), 0);
}

TEST(LinfTest, Examples) {
  EXPECT_EQ(linf_distance(std::vector<double>{1, 2}, std::vector<double>{1, 2}), 0.0);
  EXPECT_EQ(linf_distance(std::vector<double>{0.5, 0.5, 0.5, 1}, std::vector<double>{0, 1, 0, 1}),
            0.5);
  EXPECT_EQ(linf_distance(std::vector<double>{1, 0}, std::vector<double>{0, 0}), 1.0);
  EXPECT_THROW(linf_distance(std::vector<double>{1}, std::vector<double>{0, 0}), ArgumentError);
}

TEST(OrientationTest, Parse) {
  EXPECT_EQ(parse_orientation("convex-first"), Orientation::convex_first());
  EXPECT_EQ(parse_orientation("concave-first"), Orientation::concave_first());
  EXPECT_EQ(to_string(Orientation::concave_first()), "concave-first");
  EXPECT_THROW(parse_orientation("sideways"), ArgumentError);
}

namespace {

// Sign changes of the data restricted to the indices in `mask` (bit j set
// keeps index j).
int restricted_changes(const std::vector<double>& x, const std::vector<double>& v, unsigned mask,
                       Sign leading) {
  std::vector<double> xs, vs;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (mask >> j & 1u) {
      xs.push_back(x[j]);
      vs.push_back(v[j]);
    }
  }
  const DataSeries d(xs, vs);
  return count_curvature_changes(d, vs, leading, Tolerance{}.absolute(d));
}

}  // namespace

// Deleting interior points never adds sign changes. Integer data makes many
// differences exactly zero, which exercises the transparency rule.
TEST(DeletionTest, NeverAddsSignChanges) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 3; n <= 8; ++n) {
    for (int it = 0; it < 40; ++it) {
      std::vector<double> x(n), v(n);
      double xv = 0;
      for (std::size_t j = 0; j < n; ++j) {
        xv += 1 + static_cast<double>(rng() % 3);
        x[j] = xv;
        v[j] = static_cast<double>(rng() % 5) - 2.0;
      }
      const unsigned full = (1u << n) - 1;
      const unsigned ends = 1u | (1u << (n - 1));
      for (Sign lead : {Sign::Plus, Sign::Minus}) {
        const int all = restricted_changes(x, v, full, lead);
        for (unsigned mask = 0; mask <= full; ++mask) {
          if ((mask & ends) != ends) continue;
          EXPECT_LE(restricted_changes(x, v, mask, lead), all) << "n=" << n << " mask=" << mask;
        }
      }
    }
  }
}

// Consequence used by the certificate: a feasible vector stays feasible on
// every subset containing both ends.
TEST(DeletionTest, FeasibilityIsInherited) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<double> x(n), v(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = static_cast<double>(j);
      v[j] = static_cast<double>(rng() % 7);
    }
    const DataSeries d(x, v);
    const int q = count_curvature_changes(d, v, Sign::Plus, Tolerance{}.absolute(d));
    const unsigned full = (1u << n) - 1;
    const unsigned ends = 1u | (1u << (n - 1));
    for (unsigned mask = ends; mask <= full; ++mask) {
      if ((mask & ends) != ends) continue;
      EXPECT_LE(restricted_changes(x, v, mask, Sign::Plus), q);
    }
  }
}
