#include "ccsmooth/join.hpp"

#include <algorithm>
#include <string>

namespace ccsmooth {

bool Parallelogram::strictly_contains(double x, double f) const {
  const double xs = corners[0].first;
  const double xt = corners[2].first;
  if (!(xs < x && x < xt)) return false;
  const double w = (x - xs) / (xt - xs);
  // Edges (s, f_s) -> (t, f_t - 2 sigma h) and (s, f_s + 2 sigma h) -> (t, f_t).
  const double a = corners[0].second + (corners[3].second - corners[0].second) * w;
  const double b = corners[1].second + (corners[2].second - corners[1].second) * w;
  return std::min(a, b) < f && f < std::max(a, b);
}

Parallelogram join_parallelogram(const DataSeries& d, std::size_t s, std::size_t t, double h,
                                 Sign sigma) {
  if (!(s < t) || t >= d.size()) throw ArgumentError("join_parallelogram: need s < t < n");
  const double lift = 2.0 * to_double(sigma) * h;
  Parallelogram p;
  p.corners = {{{d.x(s), d.f(s)},
                {d.x(s), d.f(s) + lift},
                {d.x(t), d.f(t)},
                {d.x(t), d.f(t) - lift}}};
  return p;
}

double join_gradient(const DataSeries& d, std::size_t s, std::size_t t, double h, Sign sigma) {
  if (!(s < t) || t >= d.size()) {
    throw ArgumentError("join_gradient: undefined for a closed join (s == t)");
  }
  return (d.f(t) - d.f(s) - 2.0 * to_double(sigma) * h) / (d.x(t) - d.x(s));
}

double join_gradient(const SolverState& st, std::size_t alpha) {
  if (alpha + 1 >= st.S.elements.size()) throw ArgumentError("join_gradient: no such join");
  const std::size_t s = st.S.elements[alpha];
  return join_gradient(*st.data, s, st.I.next(s), st.h, st.piece_sign(alpha));
}

namespace {

// Join constraints in the view: the left piece (raised by h)
// must bend up into the join at s and the right piece (lowered by h) must
// bend down out of it at t. Only checked where the scan has moved the end.
void check_join_constraints(const SolverState& st, const SignedView& v, std::size_t s0,
                            std::size_t t0, std::size_t s, std::size_t t) {
  if (!(s < t)) return;
  const double h = st.h;
  const double ys = v.f(s) + h;
  const double yt = v.f(t) - h;
  if (s > s0) {
    const std::size_t sm = st.I.prev(s);
    const double ysm = v.f(sm) + h;
    const double w = (v.x(s) - v.x(sm)) / (v.x(t) - v.x(sm));
    const double dev = ys - (ysm + (yt - ysm) * w);
    if (dev > st.tau) {
      throw InternalError("join constraint violated at s=" + std::to_string(s + 1));
    }
  }
  if (t < t0) {
    const std::size_t tp = st.I.next(t);
    const double ytp = v.f(tp) - h;
    const double w = (v.x(t) - v.x(s)) / (v.x(tp) - v.x(s));
    const double dev = yt - (ys + (ytp - ys) * w);
    if (dev < -st.tau) {
      throw InternalError("join constraint violated at t=" + std::to_string(t + 1));
    }
  }
}

// Steps 2 to 8 of the convex-concave scan on view `v` between adjacent
// members s < t of I. Moves s right and t left, inserting the new ends into
// I and raising h when that is not more expensive than stopping.
void scan_join(SolverState& st, const SignedView& v, std::size_t& s, std::size_t& t) {
  const SignedView flipped = v.flipped();
  const std::size_t s0 = s;
  const std::size_t t0 = t;
  // Ties (within tau) must extend: stopping on an exact tie can leave a
  // join the current price cannot pay for.
  const bool strict = st.strict_tests;
  std::size_t guard = 0;

  while (s + 1 < t) {
    if (++guard > st.n() + 2) throw InternalError("closejoin: no progress");
    const std::size_t width = t - s;
    PassRecord rec{s, t, st.h, s, t, st.h};
    ++st.passes;

    // Extend the left (convex) piece along I^+(s, t).
    const auto lower = lower_hull(v, s, t, &st.ops);
    for (std::size_t pos = 0;; ++pos) {
      const std::size_t next = lower[pos + 1];
      const double hp = std::max(st.h, segment_price(v, s, next, &st.ops).h);
      const double reach = v.chord(s, next, t);
      const double bound = v.f(t) - 2.0 * hp;
      if (strict ? reach > bound + st.tau : reach >= bound) break;
      if (next != t) st.I.insert_after(s, next);
      st.h = hp;
      s = next;
      if (st.check_invariants) check_join_constraints(st, v, s0, t0, s, t);
      if (!(s + 1 < t)) break;
    }

    // Extend the right (concave) piece backwards along I^-(s, t).
    if (s != t) {
      const auto upper = lower_hull(flipped, s, t, &st.ops);
      for (std::size_t pos = upper.size() - 1;; --pos) {
        const std::size_t prev = upper[pos - 1];
        const double hp = std::max(st.h, segment_price(flipped, prev, t, &st.ops).h);
        const double reach = v.chord(prev, t, s);
        const double bound = v.f(s) + 2.0 * hp;
        if (strict ? reach < bound - st.tau : reach <= bound) break;
        if (prev != s) st.I.insert_after(s, prev);
        st.h = hp;
        t = prev;
        if (st.check_invariants) check_join_constraints(st, v, s0, t0, s, t);
        if (!(s < t)) break;
      }
    }

    rec.s_after = s;
    rec.t_after = t;
    rec.h_after = st.h;
    if (st.on_pass) st.on_pass(rec);
    if (s == t || t - s == width) break;
  }
}

}  // namespace

void closejoin(SolverState& st, std::size_t alpha) {
  auto& S = st.S.elements;
  if (alpha + 1 >= S.size()) throw ArgumentError("closejoin: no such join");
  std::size_t s = S[alpha];
  std::size_t t = st.I.next(s);
  if (!st.I.contains(s) || t == npos) throw ArgumentError("closejoin: join ends not in I");

  TraceEvent ev;
  ev.kind = TraceEvent::Kind::CloseJoin;
  ev.alpha = alpha;
  ev.h_before = st.h;
  ev.s_before = s;

  scan_join(st, st.view(alpha), s, t);
  S[alpha] = s;
  ++st.closejoin_calls;

  if (st.trace) {
    ev.h_after = st.h;
    ev.s_after = s;
    ev.t_after = t;
    st.trace->push_back(ev);
  }
}

Approximation best_convex_concave(const DataSeries& d, Orientation o, JoinOptions opts) {
  const std::size_t n = d.size();
  SolverState st(d, o, opts.tol);
  st.strict_tests = opts.strict_tests;
  st.check_invariants = opts.check_invariants;
  if (n <= 2) {
    for (std::size_t j = 0; j < n; ++j) st.I.insert(j);
    st.S.elements = {n - 1};
    return reconstruct_state(st, 1);
  }
  st.I.insert(0);
  st.I.insert(n - 1);
  st.S.elements = {0, n - 1};
  closejoin(st, 0);
  return reconstruct_state(st, 1);
}

}  // namespace ccsmooth
