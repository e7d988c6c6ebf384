#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ccsmooth/core.hpp"
#include "ccsmooth/hull.hpp"
#include "ccsmooth/index_set.hpp"

namespace ccsmooth {

/// Ordered piece right-ends s_1 <= s_2 <= ... with n-1 last (0-based).
/// Equal neighbours only occur transiently while h == 0.
struct PieceSet {
  std::vector<std::size_t> elements;

  std::size_t joins() const { return elements.empty() ? 0 : elements.size() - 1; }
};

/// One pass of the convex-concave scan (Steps 2 to 8).
struct PassRecord {
  std::size_t s_before = 0;
  std::size_t t_before = 0;
  double h_before = 0.0;
  std::size_t s_after = 0;
  std::size_t t_after = 0;
  double h_after = 0.0;
};

struct TraceEvent {
  enum class Kind { Split, CloseJoin, Reopen };
  Kind kind = Kind::CloseJoin;
  std::size_t alpha = 0;  ///< join index (CloseJoin/Reopen) or piece beta (Split)
  double h_before = 0.0;
  double h_after = 0.0;
  std::size_t s_before = 0;
  std::size_t s_after = 0;
  std::size_t t_after = 0;
  std::size_t j_star = npos;  ///< Split only
  std::size_t k = npos;       ///< Split only

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Mutable state shared by closejoin and the general solver: price h, the
/// global vertex set I, and the piece set S, all for one orientation.
struct SolverState {
  SolverState(const DataSeries& d, Orientation o, Tolerance tol = {});

  const DataSeries* data;
  Orientation orientation;
  double tau;

  IndexSet I;
  PieceSet S;
  double h = 0.0;

  /// Both Step-3/Step-6 inequalities strict. false reproduces the known
  /// failure mode and exists for regression tests only.
  bool strict_tests = true;
  bool check_invariants = false;

  OpCounter ops;
  std::size_t closejoin_calls = 0;
  std::size_t passes = 0;
  std::vector<TraceEvent>* trace = nullptr;
  std::function<void(const PassRecord&)> on_pass;

  std::size_t n() const { return data->size(); }
  /// Actual convexity sign of piece a (0-based): first_piece * (-1)^a.
  Sign piece_sign(std::size_t a) const {
    return a % 2 == 0 ? orientation.first_piece : -orientation.first_piece;
  }
  /// The data as seen by piece a, in which that piece is convex.
  SignedView view(std::size_t a) const { return SignedView(*data, piece_sign(a)); }
  bool zero_price() const { return h <= tau; }
  /// Right end t_a of join a: s_a^+(I) when h > 0, s_a otherwise.
  std::size_t join_end(std::size_t a) const;
};

/// y(S) from the state: f_i + sigma_a h on the members of I in piece a,
/// linear interpolation elsewhere. Fills pieces, joins and vertex sets.
Approximation reconstruct_state(const SolverState& st, int q);

}  // namespace ccsmooth
