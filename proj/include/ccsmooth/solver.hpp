#pragma once

// Best approximation with at most q changes of convexity. The solution for
// q is grown from the one for q - 2: the piece holding the data point that
// fixes the current price is split there by a new piece of the opposite
// convexity and two joins, every join is closed at the new price, and joins
// closed while the price was still lower are reopened if their end
// constraints no longer hold.

#include <cstddef>
#include <optional>
#include <vector>

#include "ccsmooth/core.hpp"
#include "ccsmooth/state.hpp"

namespace ccsmooth {

struct SolveOptions {
  Tolerance tol{};
  /// Move y_1 and then y_n onto the data when that keeps y in Y_q.
  bool pin_endpoints = true;
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
  bool strict_tests = true;
  std::vector<TraceEvent>* trace = nullptr;
};

/// h(S): the largest price of making each piece convex/concave on its own.
double piece_price(const SolverState& st);
double piece_price(const DataSeries& d, const PieceSet& S, const VertexSet& I,
                   Orientation o = Orientation::convex_first());

/// Lowest index attaining h(S); nullopt when h(S) <= tau.
std::optional<CriticalIndex> find_critical_index(const SolverState& st);
/// As above but throws ArgumentError when h(S) is zero.
CriticalIndex locate_critical_index(const DataSeries& d, const PieceSet& S, const VertexSet& I,
                                    Orientation o = Orientation::convex_first(),
                                    Tolerance tol = {});

/// y(S) for a given piece set, vertex set and price (no endpoint pinning).
Approximation reconstruct(const DataSeries& d, const PieceSet& S, const VertexSet& I, double h,
                          Orientation o = Orientation::convex_first(), Tolerance tol = {});

/// Best approximation over Y_q with the given orientation.
Approximation solve(const DataSeries& d, int q, Orientation o = Orientation::convex_first(),
                    SolveOptions opts = {});

/// Best of the two orientations; ties go to convex-first.
Approximation solve_best_orientation(const DataSeries& d, int q, SolveOptions opts = {});

}  // namespace ccsmooth
