#include "ccsmooth/solver.hpp"

#include <algorithm>
#include <string>

#include "ccsmooth/join.hpp"

namespace ccsmooth {

namespace {

// First member of I in piece b.
std::size_t piece_start(const SolverState& st, std::size_t b) {
  return b == 0 ? 0 : st.I.next(st.S.elements[b - 1]);
}

struct PieceScan {
  double h = 0.0;
  std::size_t j_star = npos;
  std::size_t k = npos;
  std::size_t k_plus = npos;
  std::size_t beta = 0;
};

PieceScan scan_pieces(const SolverState& st, OpCounter* ops = nullptr) {
  PieceScan best;
  const auto& S = st.S.elements;
  for (std::size_t b = 0; b < S.size(); ++b) {
    const std::size_t start = piece_start(st, b);
    if (start == npos || start >= S[b]) continue;
    const SignedView v = st.view(b);
    for (std::size_t i = start; i != S[b]; i = st.I.next(i)) {
      const std::size_t c = st.I.next(i);
      const SegmentPrice seg = segment_price(v, i, c, ops);
      if (seg.argmax != npos && seg.h > best.h) best = {seg.h, seg.argmax, i, c, b};
    }
  }
  return best;
}

SolverState make_state(const DataSeries& d, const PieceSet& S, const VertexSet& I, double h,
                       Orientation o, Tolerance tol) {
  if (S.elements.empty() || S.elements.back() != d.size() - 1) {
    throw ArgumentError("piece set must end at the last index");
  }
  if (!std::is_sorted(S.elements.begin(), S.elements.end())) {
    throw ArgumentError("piece set must be sorted");
  }
  SolverState st(d, o, tol);
  st.I = IndexSet::from_sorted(d.size(), I.indices);
  for (std::size_t s : S.elements) {
    if (!st.I.contains(s)) throw ArgumentError("piece end " + std::to_string(s + 1) + " not in I");
  }
  st.S = S;
  st.h = h;
  return st;
}

// Each piece, seen in its own view, must be the lower hull of its data: the
// members of I bend upwards and no data point lies below their interpolant.
void check_structure(const SolverState& st) {
  const auto& S = st.S.elements;
  for (std::size_t b = 0; b < S.size(); ++b) {
    const std::size_t start = piece_start(st, b);
    if (start == npos || start > S[b]) throw InternalError("piece " + std::to_string(b) + " empty");
    const SignedView v = st.view(b);
    for (std::size_t i = start; i != S[b]; i = st.I.next(i)) {
      const std::size_t c = st.I.next(i);
      if (i != start) {
        const std::size_t p = st.I.prev(i);
        if (v.f(i) - v.chord(p, c, i) > st.tau) {
          throw InternalError("piece " + std::to_string(b) + " not convex at " +
                              std::to_string(i + 1));
        }
      }
      for (std::size_t j = i + 1; j < c; ++j) {
        if (v.chord(i, c, j) - v.f(j) > st.tau) {
          throw InternalError("data below piece " + std::to_string(b) + " at " +
                              std::to_string(j + 1));
        }
      }
    }
  }
}

void record(SolverState& st, TraceEvent ev) {
  if (st.trace) st.trace->push_back(ev);
}

// Steps 3 to 5 after a split: close every join at the new price, then reopen
// joins that were closed too far while h was still rising.
void close_all(SolverState& st) {
  auto& S = st.S.elements;
  const std::size_t joins = S.size() - 1;
  const double h_entry = st.h;
  const std::vector<std::size_t> s_entry = S;
  std::vector<std::size_t> t_entry(joins);
  for (std::size_t a = 0; a < joins; ++a) t_entry[a] = st.I.next(S[a]);

  std::size_t gamma = 0;
  std::size_t alpha_bar = npos;
  for (std::size_t a = 0; a < joins; ++a) {
    const double before = st.h;
    closejoin(st, a);
    if (st.h > before) alpha_bar = a;
    if (st.zero_price()) gamma = a + 1;
  }
  if (st.h == h_entry || st.zero_price()) return;

  const double h_final = st.h;
  for (std::size_t a = 0; a < joins; ++a) {
    bool reopen = a < gamma;
    if (!reopen) {
      if (a == alpha_bar) return;
      const SignedView v = st.view(a);
      const std::size_t s = S[a];
      const std::size_t t = st.I.next(s);
      const double g = (v.f(t) - v.f(s) - 2.0 * st.h) / (v.x(t) - v.x(s));
      if (s > s_entry[a] && v.gradient(st.I.prev(s), s) > g) reopen = true;
      if (!reopen && t < t_entry[a] && v.gradient(t, st.I.next(t)) > g) reopen = true;
    }
    if (!reopen) continue;

    TraceEvent ev;
    ev.kind = TraceEvent::Kind::Reopen;
    ev.alpha = a;
    ev.h_before = ev.h_after = st.h;
    ev.s_before = S[a];
    S[a] = s_entry[a];
    st.ops.add(st.I.erase_between(S[a], t_entry[a]));
    ev.s_after = S[a];
    ev.t_after = t_entry[a];
    record(st, ev);
    closejoin(st, a);
    if (st.check_invariants && st.h != h_final) {
      throw InternalError("price changed while reopening join " + std::to_string(a));
    }
  }
}

// The join points the next split would have produced.
std::vector<std::size_t> certificate(const SolverState& st, const CriticalIndex& c) {
  IndexSet I = st.I;
  I.insert_after(c.k, c.j_star);
  std::vector<std::size_t> S = st.S.elements;
  S.insert(S.begin() + static_cast<std::ptrdiff_t>(c.beta), {c.k, c.j_star});
  std::vector<std::size_t> K;
  for (std::size_t a = 0; a + 1 < S.size(); ++a) {
    K.push_back(S[a]);
    K.push_back(I.next(S[a]));
  }
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  return K;
}

// Moves y_1, then y_n, onto the data when y stays in Y_q without using more
// sign changes than before. The price is unaffected either way.
void pin_endpoints(const DataSeries& d, Approximation& a, double tau) {
  const std::size_t n = d.size();
  auto try_pin = [&](std::size_t e) {
    if (a.y[e] == d.f(e)) return false;
    const double old = a.y[e];
    a.y[e] = d.f(e);
    const int used = count_curvature_changes(d, a.y, a.orientation.first_piece, tau);
    if (used <= a.sign_changes_used) {
      a.sign_changes_used = used;
      return true;
    }
    a.y[e] = old;
    return false;
  };
  a.diagnostics.pinned_first = try_pin(0);
  a.diagnostics.pinned_last = try_pin(n - 1);
}

std::optional<CriticalIndex> critical_of(const PieceScan& p, double tau) {
  if (p.j_star == npos || p.h <= tau) return std::nullopt;
  return CriticalIndex{p.j_star, p.k, p.k_plus, p.beta, p.h};
}

}  // namespace

double piece_price(const SolverState& st) { return scan_pieces(st).h; }

double piece_price(const DataSeries& d, const PieceSet& S, const VertexSet& I, Orientation o) {
  return piece_price(make_state(d, S, I, 0.0, o, {}));
}

std::optional<CriticalIndex> find_critical_index(const SolverState& st) {
  return critical_of(scan_pieces(st), st.tau);
}

CriticalIndex locate_critical_index(const DataSeries& d, const PieceSet& S, const VertexSet& I,
                                    Orientation o, Tolerance tol) {
  const auto c = find_critical_index(make_state(d, S, I, 0.0, o, tol));
  if (!c) throw ArgumentError("locate_critical_index: h(S) is zero, no critical index");
  return *c;
}

Approximation reconstruct(const DataSeries& d, const PieceSet& S, const VertexSet& I, double h,
                          Orientation o, Tolerance tol) {
  if (!(h >= 0.0)) throw ArgumentError("reconstruct: h must be non-negative");
  const SolverState st = make_state(d, S, I, h, o, tol);
  return reconstruct_state(st, static_cast<int>(S.joins()));
}

Approximation solve(const DataSeries& d, int q, Orientation o, SolveOptions opts) {
  if (q < 0) throw ArgumentError("q must be non-negative");
  const std::size_t n = d.size();
  SolverState st(d, o, opts.tol);
  st.strict_tests = opts.strict_tests;
  st.check_invariants = opts.check_invariants;
  st.trace = opts.trace;

  if (n <= 2) {
    for (std::size_t j = 0; j < n; ++j) st.I.insert(j);
    st.S.elements = {n - 1};
    return reconstruct_state(st, q);
  }

  int qbar = q % 2;
  if (qbar == 0) {
    st.S.elements = {n - 1};
    std::size_t pred = npos;
    for (std::size_t i : lower_hull(st.view(0), 0, n - 1, &st.ops)) {
      st.I.insert_after(pred, i);
      pred = i;
    }
    st.h = scan_pieces(st, &st.ops).h;
  } else {
    st.I.insert(0);
    st.I.insert(n - 1);
    st.S.elements = {0, n - 1};
    closejoin(st, 0);
  }

  while (qbar < q && !st.zero_price()) {
    if (st.check_invariants) check_structure(st);
    const auto c = critical_of(scan_pieces(st, &st.ops), st.tau);
    if (!c) throw InternalError("positive price without a critical index");

    TraceEvent ev;
    ev.kind = TraceEvent::Kind::Split;
    ev.alpha = c->beta;
    ev.h_before = st.h;
    ev.j_star = c->j_star;
    ev.k = c->k;

    st.I.insert_after(c->k, c->j_star);
    auto& S = st.S.elements;
    S.insert(S.begin() + static_cast<std::ptrdiff_t>(c->beta), {c->k, c->j_star});
    qbar += 2;
    st.h = scan_pieces(st, &st.ops).h;
    ev.h_after = st.h;
    record(st, ev);

    close_all(st);
  }
  if (st.check_invariants && !st.zero_price()) check_structure(st);

  Approximation a = reconstruct_state(st, q);
  a.sign_changes_used = count_curvature_changes(d, a.y, o.first_piece, st.tau);
  if (!st.zero_price()) {
    const auto c = critical_of(scan_pieces(st, &st.ops), st.tau);
    if (c) {
      a.diagnostics.critical = c;
      a.diagnostics.certificate = certificate(st, *c);
    }
    if (opts.pin_endpoints) pin_endpoints(d, a, st.tau);
  }
  return a;
}

Approximation solve_best_orientation(const DataSeries& d, int q, SolveOptions opts) {
  Approximation convex = solve(d, q, Orientation::convex_first(), opts);
  Approximation concave = solve(d, q, Orientation::concave_first(), opts);
  const double tau = opts.tol.absolute(d);
  return concave.h < convex.h - tau ? concave : convex;
}

}  // namespace ccsmooth
