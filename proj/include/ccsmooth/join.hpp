#pragma once

// Closing joins. A join is the straight segment between consecutive members
// s < t of I that separates a piece from the next one of opposite convexity.
// closejoin shrinks it as far as the current price allows, alternately
// extending the left piece along its lower hull and the right piece along
// its upper hull, raising h only when that is no more expensive than
// stopping. Run on the whole range from h = 0 it is the best convex-concave
// approximation.

#include <array>
#include <cstddef>
#include <utility>

#include "ccsmooth/core.hpp"
#include "ccsmooth/state.hpp"

namespace ccsmooth {

/// Region between the two offset chords over a join. Interior data points
/// cannot move the join; points on or outside it force it to shrink.
struct Parallelogram {
  std::array<std::pair<double, double>, 4> corners{};

  bool degenerate() const { return corners[0] == corners[1]; }
  /// Whether (x, f) lies strictly inside (false on the boundary).
  bool strictly_contains(double x, double f) const;
};

/// Vertices (x_s, f_s), (x_s, f_s + 2 sigma h), (x_t, f_t), (x_t, f_t - 2 sigma h).
Parallelogram join_parallelogram(const DataSeries& d, std::size_t s, std::size_t t, double h,
                                 Sign sigma);

/// Gradient of the join segment from (x_s, f_s + sigma h) to (x_t, f_t - sigma h)
/// for join `alpha` (0-based) of the state, s = s_alpha, t = s_alpha^+(I).
double join_gradient(const SolverState& st, std::size_t alpha);
double join_gradient(const DataSeries& d, std::size_t s, std::size_t t, double h, Sign sigma);

/// Closes join `alpha` (0-based) starting from the state's price. Updates h
/// (never down), I and S. Throws ArgumentError for a non-existent join.
void closejoin(SolverState& st, std::size_t alpha);

struct JoinOptions {
  Tolerance tol{};
  bool strict_tests = true;
  bool check_invariants = false;
};

/// Best approximation with at most one change of convexity (n >= 2).
Approximation best_convex_concave(const DataSeries& d, Orientation o, JoinOptions opts = {});

}  // namespace ccsmooth
