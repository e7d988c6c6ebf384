#include "ccsmooth/hull.hpp"

#include <algorithm>

namespace ccsmooth {

namespace {

void check_range(const DataSeries& d, std::size_t r, std::size_t s) {
  if (r > s) throw ArgumentError("range start exceeds range end");
  if (s >= d.size()) throw ArgumentError("range end out of bounds");
}

// Positive iff point j lies strictly below the chord through i and k.
double turn(const SignedView& v, std::size_t i, std::size_t j, std::size_t k) {
  return (v.x(j) - v.x(i)) * (v.f(k) - v.f(i)) - (v.x(k) - v.x(i)) * (v.f(j) - v.f(i));
}

}  // namespace

std::vector<std::size_t> lower_hull(const SignedView& v, std::size_t r, std::size_t s,
                                    OpCounter* ops) {
  std::vector<std::size_t> hull;
  hull.reserve(std::min<std::size_t>(s - r + 1, 64));
  for (std::size_t k = r; k <= s; ++k) {
    while (hull.size() >= 2 && !(turn(v, hull[hull.size() - 2], hull.back(), k) > 0.0)) {
      hull.pop_back();
      if (ops) ops->add();
    }
    hull.push_back(k);
    if (ops) ops->add();
  }
  return hull;
}

SegmentPrice segment_price(const SignedView& v, std::size_t i, std::size_t k, OpCounter* ops) {
  SegmentPrice best;
  for (std::size_t j = i + 1; j < k; ++j) {
    const double gap = 0.5 * (v.f(j) - v.chord(i, k, j));
    if (best.argmax == npos || gap > best.h) {
      best.h = gap;
      best.argmax = j;
    }
  }
  if (ops && k > i + 1) ops->add(k - i - 1);
  if (best.h < 0.0) best.h = 0.0;
  return best;
}

std::pair<std::size_t, std::size_t> neighbours(std::size_t j, const VertexSet& set) {
  const auto& idx = set.indices;
  if (idx.empty()) throw ArgumentError("neighbours: empty vertex set");
  auto need_two = [&] {
    if (idx.size() < 2) throw ArgumentError("neighbours: extrapolation needs two vertices");
  };
  std::size_t plus;
  std::size_t minus;
  if (j < set.s) {
    plus = *std::upper_bound(idx.begin(), idx.end(), j);
  } else {
    need_two();
    plus = idx[idx.size() - 2];
  }
  if (j > set.r) {
    minus = *(std::lower_bound(idx.begin(), idx.end(), j) - 1);
  } else {
    need_two();
    minus = idx[1];
  }
  return {minus, plus};
}

std::vector<double> interpolant(const DataSeries& d, const VertexSet& set,
                                std::span<const double> values) {
  const auto& idx = set.indices;
  if (values.size() != idx.size()) {
    throw ArgumentError("interpolant: one value per vertex required");
  }
  if (idx.empty() || idx.front() != set.r || idx.back() != set.s || set.s >= d.size()) {
    throw ArgumentError("interpolant: malformed vertex set");
  }
  std::vector<double> out(set.s - set.r + 1);
  out[0] = values[0];
  for (std::size_t m = 1; m < idx.size(); ++m) {
    const std::size_t a = idx[m - 1];
    const std::size_t b = idx[m];
    const double g = (values[m] - values[m - 1]) / (d.x(b) - d.x(a));
    for (std::size_t j = a + 1; j < b; ++j) {
      out[j - set.r] = values[m - 1] + g * (d.x(j) - d.x(a));
    }
    out[b - set.r] = values[m];
  }
  return out;
}

VertexSet optimal_vertex_set(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma,
                             OpCounter* ops) {
  check_range(d, r, s);
  VertexSet out{r, s, {}, sigma};
  if (s - r <= 1) {
    for (std::size_t j = r; j <= s; ++j) out.indices.push_back(j);
    return out;
  }
  out.indices = lower_hull(SignedView(d, sigma), r, s, ops);
  return out;
}

PriceDetail price_detail(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma) {
  check_range(d, r, s);
  PriceDetail out;
  if (s - r <= 1) return out;
  const SignedView v(d, sigma);
  const auto hull = lower_hull(v, r, s);
  for (std::size_t m = 1; m < hull.size(); ++m) {
    const auto seg = segment_price(v, hull[m - 1], hull[m]);
    if (seg.argmax != npos && seg.h > out.h) {
      out = {seg.h, seg.argmax, hull[m - 1], hull[m]};
    }
  }
  return out;
}

double price(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma) {
  return price_detail(d, r, s, sigma).h;
}

Approximation best_convex_approximation(const DataSeries& d, Sign sigma) {
  const std::size_t n = d.size();
  Approximation a;
  a.q = 0;
  a.orientation = Orientation{sigma};
  a.vertex_set = optimal_vertex_set(d, 0, n - 1, sigma);
  const PriceDetail p = price_detail(d, 0, n - 1, sigma);
  a.h = p.h;

  std::vector<double> raised(a.vertex_set.size());
  for (std::size_t m = 0; m < raised.size(); ++m) {
    raised[m] = d.f(a.vertex_set.indices[m]) + to_double(sigma) * a.h;
  }
  a.y = interpolant(d, a.vertex_set, raised);
  a.pieces = {{0, n - 1}};
  a.piece_set = {n - 1};
  a.sign_changes_used = count_curvature_changes(d, a.y, sigma, Tolerance{}.absolute(d));
  if (p.j_star != npos) {
    a.diagnostics.critical = CriticalIndex{p.j_star, p.k, p.k_plus, 0, p.h};
    a.diagnostics.certificate = {p.k, p.j_star, p.k_plus};
  }
  return a;
}

}  // namespace ccsmooth
