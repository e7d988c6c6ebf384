#include "ccsmooth/state.hpp"

namespace ccsmooth {

SolverState::SolverState(const DataSeries& d, Orientation o, Tolerance tol)
    : data(&d), orientation(o), tau(tol.absolute(d)), I(d.size()) {}

std::size_t SolverState::join_end(std::size_t a) const {
  const std::size_t s = S.elements[a];
  return zero_price() ? s : I.next(s);
}

Approximation reconstruct_state(const SolverState& st, int q) {
  const DataSeries& d = *st.data;
  const std::size_t n = d.size();
  const auto& S = st.S.elements;
  if (S.empty() || S.back() != n - 1) throw InternalError("reconstruct: malformed piece set");

  Approximation a;
  a.h = st.h;
  a.q = q;
  a.orientation = st.orientation;
  a.piece_set = S;

  std::size_t start = 0;
  for (std::size_t p = 0; p < S.size(); ++p) {
    a.pieces.push_back({start, S[p]});
    if (p + 1 < S.size()) {
      const std::size_t t = st.join_end(p);
      if (t == npos) throw InternalError("reconstruct: join without right end");
      if (t > S[p]) a.joins.push_back({S[p], t});
      start = t;
    }
  }

  const auto members = st.I.to_vector();
  a.vertex_set = VertexSet{0, n - 1, members, st.orientation.first_piece};
  std::vector<double> values(members.size());
  std::size_t piece = 0;
  for (std::size_t m = 0; m < members.size(); ++m) {
    const std::size_t i = members[m];
    while (piece + 1 < S.size() && i > S[piece]) ++piece;
    values[m] = d.f(i) + to_double(st.piece_sign(piece)) * st.h;
  }
  a.y = interpolant(d, a.vertex_set, values);
  a.sign_changes_used = count_curvature_changes(d, a.y, st.orientation.first_piece, st.tau);
  a.diagnostics.operations = st.ops.count;
  a.diagnostics.closejoin_calls = st.closejoin_calls;
  a.diagnostics.passes = st.passes;
  return a;
}

}  // namespace ccsmooth
