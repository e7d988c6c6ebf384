#pragma once

// Brute-force reference for small n, sharing no code with the solver beyond
// the data types: every admissible sign pattern of the second divided
// differences is fixed in turn, the best approximation with that pattern is
// a linear program, and the best pattern wins.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccsmooth/core.hpp"

namespace ccsmooth {

class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Required signs (+1: c_i >= 0, -1: c_i <= 0) of c_1 .. c_{n-2}.
struct SignPattern {
  std::vector<int> signs;
  int changes = 0;  ///< counted from the orientation's leading sign

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// All patterns of length n-2 with at most q changes counted from the
/// leading sign, in lexicographic order with + before -. n < 3 gives one
/// empty pattern.
std::vector<SignPattern> enumerate_patterns(std::size_t n, int q, Orientation o);

struct PatternResult {
  double h = 0.0;
  std::vector<double> witness;
};

/// min ||v - f||_inf over v whose second differences follow the pattern.
PatternResult min_linf_for_pattern(const DataSeries& d, const SignPattern& p);

struct OracleOptions {
  std::size_t max_n = 12;
};

struct OracleResult {
  double h = 0.0;
  std::vector<double> witness;
  std::size_t patterns = 0;
};

/// Best approximation over Y_q by enumeration. Throws OracleRefusal when
/// n > max_n.
OracleResult oracle_solve(const DataSeries& d, int q, Orientation o, OracleOptions opts = {});

/// oracle_solve for q = 0 .. qmax, solving each pattern once.
std::vector<OracleResult> oracle_profile(const DataSeries& d, int qmax, Orientation o,
                                         OracleOptions opts = {});

}  // namespace ccsmooth
