#include "ccsmooth/core.hpp"

#include <algorithm>
#include <cmath>

namespace ccsmooth {

std::string to_string(Orientation o) {
  return o.first_piece == Sign::Plus ? "convex-first" : "concave-first";
}

Orientation parse_orientation(const std::string& name) {
  if (name == "convex-first") return Orientation::convex_first();
  if (name == "concave-first") return Orientation::concave_first();
  throw ArgumentError("unknown orientation '" + name + "'");
}

DataSeries::DataSeries(std::vector<double> x, std::vector<double> f)
    : x_(std::move(x)), f_(std::move(f)) {
  if (x_.size() != f_.size()) {
    throw ArgumentError("DataSeries: abscissae and ordinates differ in length");
  }
  if (x_.empty()) throw ArgumentError("DataSeries: no points");
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (!std::isfinite(x_[j]) || !std::isfinite(f_[j])) {
      throw ArgumentError("DataSeries: non-finite value at index " + std::to_string(j + 1));
    }
    if (j > 0 && !(x_[j - 1] < x_[j])) {
      throw ArgumentError("DataSeries: abscissae not strictly increasing at index " +
                          std::to_string(j + 1));
    }
  }
}

DataSeries DataSeries::equally_spaced(std::vector<double> f) {
  std::vector<double> x(f.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = static_cast<double>(j);
  return DataSeries(std::move(x), std::move(f));
}

double DataSeries::scale() const {
  double m = 1.0;
  for (double v : f_) m = std::max(m, std::abs(v));
  return m;
}

DataSeries DataSeries::negated() const {
  std::vector<double> g(f_.size());
  std::transform(f_.begin(), f_.end(), g.begin(), [](double v) { return -v; });
  return DataSeries(x_, std::move(g));
}

DataSeries DataSeries::with_values(std::vector<double> f) const {
  return DataSeries(x_, std::move(f));
}

bool VertexSet::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

namespace {

void check_triple(std::span<const double> v, std::span<const double> x, std::size_t i,
                  std::size_t j, std::size_t k) {
  if (!(i < j && j < k)) throw ArgumentError("divided difference needs i < j < k");
  if (k >= v.size() || k >= x.size()) throw ArgumentError("divided difference index out of range");
}

}  // namespace

double second_divided_difference(std::span<const double> v, std::span<const double> x,
                                 std::size_t i, std::size_t j, std::size_t k) {
  check_triple(v, x, i, j, k);
  const double right = (v[k] - v[j]) / (x[k] - x[j]);
  const double left = (v[j] - v[i]) / (x[j] - x[i]);
  return (right - left) / (x[k] - x[i]);
}

double chord_deviation(std::span<const double> v, std::span<const double> x, std::size_t i,
                       std::size_t j, std::size_t k) {
  check_triple(v, x, i, j, k);
  const double w = (x[j] - x[i]) / (x[k] - x[i]);
  return v[j] - (v[i] + (v[k] - v[i]) * w);
}

std::vector<double> consecutive_differences(const DataSeries& d, std::span<const double> v) {
  if (v.size() != d.size()) throw ArgumentError("consecutive_differences: length mismatch");
  std::vector<double> c;
  if (d.size() < 3) return c;
  c.reserve(d.size() - 2);
  for (std::size_t i = 0; i + 2 < d.size(); ++i) {
    c.push_back(second_divided_difference(v, d.x(), i, i + 1, i + 2));
  }
  return c;
}

int count_sign_changes(std::span<const double> seq, Sign leading, double zero_tol) {
  int state = static_cast<int>(leading);
  int changes = 0;
  for (double e : seq) {
    if (std::abs(e) <= zero_tol) continue;
    const int sg = e > 0 ? 1 : -1;
    if (sg != state) {
      ++changes;
      state = sg;
    }
  }
  return changes;
}

int count_curvature_changes(const DataSeries& d, std::span<const double> v, Sign leading,
                            double tau) {
  if (v.size() != d.size()) throw ArgumentError("count_curvature_changes: length mismatch");
  if (d.size() < 3) return 0;
  std::vector<double> signed_curvature(d.size() - 2);
  for (std::size_t i = 0; i + 2 < d.size(); ++i) {
    signed_curvature[i] = -chord_deviation(v, d.x(), i, i + 1, i + 2);
  }
  return count_sign_changes(signed_curvature, leading, tau);
}

bool is_feasible(const DataSeries& d, std::span<const double> v, int q, Orientation o,
                 Tolerance tol) {
  if (q < 0) throw ArgumentError("is_feasible: q must be non-negative");
  return count_curvature_changes(d, v, o.first_piece, tol.absolute(d)) <= q;
}

double linf_distance(std::span<const double> v, std::span<const double> f) {
  if (v.size() != f.size()) throw ArgumentError("linf_distance: length mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) m = std::max(m, std::abs(v[j] - f[j]));
  return m;
}

}  // namespace ccsmooth
