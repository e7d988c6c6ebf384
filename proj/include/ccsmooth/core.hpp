#pragma once

// Domain types and the second-divided-difference machinery shared by every
// module: data series, signs, orientations, feasibility in the sign-change
// constrained set, and the approximation result type.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccsmooth {

/// Raised on a violated precondition (bad index order, mismatched lengths...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr double to_double(Sign s) { return static_cast<double>(static_cast<int>(s)); }
constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }

/// Convexity of the first piece. Convex-first is the standard feasible set;
/// concave-first is its mirror image under f -> -f.
struct Orientation {
  Sign first_piece = Sign::Plus;

  static constexpr Orientation convex_first() { return {Sign::Plus}; }
  static constexpr Orientation concave_first() { return {Sign::Minus}; }
  friend constexpr bool operator==(Orientation, Orientation) = default;
};

std::string to_string(Orientation o);
/// Accepts "convex-first" / "concave-first".
Orientation parse_orientation(const std::string& name);

/// Abscissae and ordinates of the observations. Abscissae are strictly
/// increasing; construction validates that.
class DataSeries {
 public:
  DataSeries(std::vector<double> x, std::vector<double> f);

  /// Abscissae 0, 1, ..., n-1.
  static DataSeries equally_spaced(std::vector<double> f);

  std::size_t size() const { return x_.size(); }
  std::span<const double> x() const { return x_; }
  std::span<const double> f() const { return f_; }
  double x(std::size_t i) const { return x_[i]; }
  double f(std::size_t i) const { return f_[i]; }

  /// max(1, max |f_j|); the scale the absolute tolerance is measured against.
  double scale() const;

  DataSeries negated() const;
  /// Same data with ordinates replaced by `f` (length must match).
  DataSeries with_values(std::vector<double> f) const;

 private:
  std::vector<double> x_;
  std::vector<double> f_;
};

/// Absolute comparison tolerance: tau = relative * max(1, max|f|).
struct Tolerance {
  double relative = 1e-12;

  double absolute(const DataSeries& d) const { return relative * d.scale(); }
};

/// Sorted index set I with first == r and last == s, tagged with the sign of
/// the hull it describes (+ lower boundary, - upper boundary).
struct VertexSet {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<std::size_t> indices;
  Sign sigma = Sign::Plus;

  std::size_t size() const { return indices.size(); }
  bool contains(std::size_t j) const;
};

struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct Join {
  std::size_t s = 0;
  std::size_t t = 0;
  friend bool operator==(const Join&, const Join&) = default;
};

/// Where the final price comes from: h = sigma/2 (f_j - f_j(k, k_plus)) for
/// the lowest such j, inside piece `beta`. All indices are 0-based.
struct CriticalIndex {
  std::size_t j_star = 0;
  std::size_t k = 0;
  std::size_t k_plus = 0;
  std::size_t beta = 0;
  double h = 0.0;
};

struct Diagnostics {
  std::optional<CriticalIndex> critical;
  /// Optimality certificate K (0-based, sorted), present when h > 0.
  std::vector<std::size_t> certificate;
  bool pinned_first = false;
  bool pinned_last = false;
  std::uint64_t operations = 0;
  std::size_t closejoin_calls = 0;
  std::size_t passes = 0;
};

/// A best approximation together with the structure that produced it.
/// Pieces are [t_{a-1}, s_a], joins are (s_a, t_a) and exist only when h > 0.
struct Approximation {
  std::vector<double> y;
  double h = 0.0;
  int q = 0;
  Orientation orientation;
  std::vector<IndexRange> pieces;
  std::vector<Join> joins;
  VertexSet vertex_set;
  std::vector<std::size_t> piece_set;
  int sign_changes_used = 0;
  Diagnostics diagnostics;
};

/// c_ijk(v) for i < j < k.
double second_divided_difference(std::span<const double> v, std::span<const double> x,
                                 std::size_t i, std::size_t j, std::size_t k);

/// v_j minus the value at x_j of the chord through (x_i, v_i), (x_k, v_k).
/// Has the opposite sign to c_ijk(v) and is measured in ordinate units.
double chord_deviation(std::span<const double> v, std::span<const double> x, std::size_t i,
                       std::size_t j, std::size_t k);

/// c_i(v) = c_{i,i+1,i+2}(v) for every i; empty when n < 3.
std::vector<double> consecutive_differences(const DataSeries& d, std::span<const double> v);

/// Sign changes in (leading, seq...). Elements with |e| <= zero_tol carry no
/// sign; the previous sign persists across them.
int count_sign_changes(std::span<const double> seq, Sign leading, double zero_tol = 0.0);

/// Sign changes of the consecutive second differences of v, the sign of each
/// difference classified with the absolute tolerance `tau` on chord deviations.
int count_curvature_changes(const DataSeries& d, std::span<const double> v, Sign leading,
                            double tau);

/// v in Y_q for orientation o (tolerance-aware sign classification).
bool is_feasible(const DataSeries& d, std::span<const double> v, int q, Orientation o,
                 Tolerance tol = {});

/// max_j |v_j - f_j|.
double linf_distance(std::span<const double> v, std::span<const double> f);

}  // namespace ccsmooth
