#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ccsmooth/join.hpp"
#include "test_util.hpp"

using namespace ccsmooth;

namespace {

SolverState open_state(const DataSeries& d, Orientation o, double h = 0.0) {
  SolverState st(d, o);
  st.I.insert(0);
  st.I.insert(d.size() - 1);
  st.S.elements = {0, d.size() - 1};
  st.h = h;
  return st;
}

}  // namespace

TEST(CloseJoinTest, AlternatingExample) {
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1});
  SolverState st = open_state(d, Orientation::convex_first());
  closejoin(st, 0);
  EXPECT_EQ(st.h, 0.5);
  EXPECT_EQ(st.S.elements[0], 2u);
  EXPECT_EQ(st.I.next(2), 3u);
}

TEST(CloseJoinTest, AlreadyClosedJoinIsUntouched) {
  const auto d = DataSeries::equally_spaced({0, 3});
  SolverState st = open_state(d, Orientation::convex_first(), 0.25);
  closejoin(st, 0);
  EXPECT_EQ(st.h, 0.25);
  EXPECT_EQ(st.S.elements, (std::vector<std::size_t>{0, 1}));
}

TEST(CloseJoinTest, PointsInsideParallelogramStopImmediately) {
  // y runs from 1 down to -1; every data point is within 1/3 of it.
  const auto d = DataSeries::equally_spaced({0, 0, 0, 0});
  SolverState st = open_state(d, Orientation::convex_first(), 1.0);
  closejoin(st, 0);
  EXPECT_EQ(st.h, 1.0);
  EXPECT_EQ(st.S.elements[0], 0u);
  EXPECT_EQ(st.I.next(0), 3u);

  const Parallelogram p = join_parallelogram(d, 0, 3, 1.0, Sign::Plus);
  for (std::size_t j = 1; j < 3; ++j) EXPECT_TRUE(p.strictly_contains(d.x(j), d.f(j)));
  EXPECT_FALSE(p.strictly_contains(d.x(0), d.f(0)));
}

TEST(CloseJoinTest, NoSuchJoin) {
  const auto d = DataSeries::equally_spaced({0, 1, 0});
  SolverState st = open_state(d, Orientation::convex_first());
  EXPECT_THROW(closejoin(st, 1), ArgumentError);
}

// A pass shrinks the join exactly when some interior point is at least h
// away from the straight join through (s, f_s + h) and (t, f_t - h).
TEST(CloseJoinTest, PassShrinksIffPointOnOrOutsideParallelogram) {
  std::mt19937_64 rng(53);
  std::size_t passes = 0;
  for (int it = 0; it < 300; ++it) {
    const DataSeries d = testutil::random_series(rng, 3 + rng() % 25);
    for (Orientation o : {Orientation::convex_first(), Orientation::concave_first()}) {
      SolverState st = open_state(d, o);
      const SignedView v = st.view(0);
      st.on_pass = [&](const PassRecord& r) {
        ++passes;
        const std::size_t s = r.s_before, t = r.t_before;
        const double h = r.h_before;
        bool outside = false;
        for (std::size_t j = s + 1; j < t; ++j) {
          const double w = (v.x(j) - v.x(s)) / (v.x(t) - v.x(s));
          const double y = v.f(s) + h + (v.f(t) - h - v.f(s) - h) * w;
          if (std::abs(v.f(j) - y) >= h) outside = true;
        }
        const bool shrank = r.t_after - r.s_after < t - s;
        EXPECT_EQ(shrank, outside) << "s=" << s << " t=" << t << " h=" << h;
      };
      closejoin(st, 0);
    }
  }
  EXPECT_GT(passes, 300u);
}

TEST(CloseJoinTest, PriceNeverDecreases) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 200; ++it) {
    const DataSeries d = testutil::random_series(rng, 3 + rng() % 30);
    SolverState st = open_state(d, Orientation::convex_first());
    st.on_pass = [](const PassRecord& r) { EXPECT_GE(r.h_after, r.h_before); };
    closejoin(st, 0);
  }
}

TEST(JoinGradientTest, Examples) {
  const DataSeries d({0, 3}, {0, 1});
  EXPECT_DOUBLE_EQ(join_gradient(d, 0, 1, 0.5, Sign::Plus), 0.0);
  EXPECT_DOUBLE_EQ(join_gradient(d, 0, 1, 0.5, Sign::Minus), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(join_gradient(d, 0, 1, 0.0, Sign::Plus), 1.0 / 3.0);
  EXPECT_THROW(join_gradient(d, 1, 1, 0.5, Sign::Plus), ArgumentError);
}

TEST(BestConvexConcaveTest, AlternatingExample) {
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1});
  const Approximation a = best_convex_concave(d, Orientation::convex_first());
  EXPECT_EQ(a.h, 0.5);
  // The literal reconstruction; the solver additionally pins the last point.
  EXPECT_EQ(a.y, (std::vector<double>{0.5, 0.5, 0.5, 0.5}));
  ASSERT_EQ(a.joins.size(), 1u);
  EXPECT_EQ(a.joins[0], (Join{2, 3}));
  EXPECT_TRUE(is_feasible(d, a.y, 1, Orientation::convex_first()));
}

TEST(BestConvexConcaveTest, RelaxedTestsReproduceTheFailure) {
  const auto d = DataSeries::equally_spaced({0, 1, 0, 1});
  JoinOptions opts;
  opts.strict_tests = false;
  const Approximation a = best_convex_concave(d, Orientation::convex_first(), opts);
  EXPECT_EQ(a.h, 0.0);
  EXPECT_NEAR(linf_distance(a.y, d.f()), 2.0 / 3.0, 1e-12);
}

TEST(BestConvexConcaveTest, ConvexAndAffineDataAreUnchanged) {
  for (const std::vector<double>& f :
       {std::vector<double>{9, 4, 1, 0, 1, 4, 9}, std::vector<double>{1, 2, 3, 4, 5}}) {
    const auto d = DataSeries::equally_spaced(f);
    const Approximation a = best_convex_concave(d, Orientation::convex_first());
    EXPECT_EQ(a.h, 0.0);
    EXPECT_EQ(a.y, f);
  }
}

TEST(BestConvexConcaveTest, TinyInputs) {
  const Approximation one = best_convex_concave(DataSeries({1.0}, {2.0}), Orientation::convex_first());
  EXPECT_EQ(one.y, std::vector<double>{2.0});
  const Approximation two = best_convex_concave(DataSeries::equally_spaced({2, -1}),
                                                Orientation::concave_first());
  EXPECT_EQ(two.y, (std::vector<double>{2, -1}));
  EXPECT_EQ(two.h, 0.0);
}
