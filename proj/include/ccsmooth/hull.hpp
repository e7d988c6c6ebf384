#pragma once

// Optimal vertex sets: the vertices of the lower (sigma = +) or upper
// (sigma = -) boundary of the convex hull of the data graph over an index
// range, found by a backtracking scan that deletes every point failing the
// strict convexity test. Prices and the best convex/concave approximation
// follow directly from them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccsmooth/core.hpp"

namespace ccsmooth {

/// Counts elementary index visits; used to check linear-time behaviour.
struct OpCounter {
  std::uint64_t count = 0;
  void add(std::uint64_t n = 1) { count += n; }
};

/// Read-only view of a DataSeries with the ordinates multiplied by a sign.
/// Everything concave is handled as convex on the flipped view.
class SignedView {
 public:
  SignedView(const DataSeries& d, Sign sign) : data_(&d), sign_(to_double(sign)), s_(sign) {}

  std::size_t size() const { return data_->size(); }
  double x(std::size_t i) const { return data_->x(i); }
  double f(std::size_t i) const { return sign_ * data_->f(i); }
  Sign sign() const { return s_; }
  const DataSeries& data() const { return *data_; }
  SignedView flipped() const { return SignedView(*data_, -s_); }

  /// Value at x_j of the line through points i and k of the view.
  double chord(std::size_t i, std::size_t k, std::size_t j) const {
    const double w = (x(j) - x(i)) / (x(k) - x(i));
    return f(i) + (f(k) - f(i)) * w;
  }
  double gradient(std::size_t i, std::size_t k) const {
    return (f(k) - f(i)) / (x(k) - x(i));
  }

 private:
  const DataSeries* data_;
  double sign_;
  Sign s_;
};

/// Lower-hull vertices of the view over [r, s] (both always kept).
std::vector<std::size_t> lower_hull(const SignedView& v, std::size_t r, std::size_t s,
                                    OpCounter* ops = nullptr);

struct SegmentPrice {
  double h = 0.0;
  std::size_t argmax = npos;  ///< lowest attaining index, npos when i, k adjacent
};

/// Half the largest height of the view above the chord i-k over (i, k).
SegmentPrice segment_price(const SignedView& v, std::size_t i, std::size_t k,
                           OpCounter* ops = nullptr);

/// (j-, j+) of j in I, with the extrapolating rules at and beyond the ends.
std::pair<std::size_t, std::size_t> neighbours(std::size_t j, const VertexSet& set);

/// Piecewise-linear extension over [r, s] of values given at the members of
/// `set` (values[m] belongs to set.indices[m]).
std::vector<double> interpolant(const DataSeries& d, const VertexSet& set,
                                std::span<const double> values);

/// I^sigma(r, s). Ranges with s - r <= 1 return [r, s].
VertexSet optimal_vertex_set(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma,
                             OpCounter* ops = nullptr);

struct PriceDetail {
  double h = 0.0;
  std::size_t j_star = npos;
  std::size_t k = npos;
  std::size_t k_plus = npos;
};

/// h^sigma(r, s) with its lowest attaining index and enclosing vertices.
PriceDetail price_detail(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma);
double price(const DataSeries& d, std::size_t r, std::size_t s, Sign sigma);

/// Best convex (sigma = +) or concave (sigma = -) approximation to all data.
Approximation best_convex_approximation(const DataSeries& d, Sign sigma);

}  // namespace ccsmooth
