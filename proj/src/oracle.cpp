#include "ccsmooth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace ccsmooth {

namespace {

// minimize c.x subject to A x <= b, x >= 0. Dense two-phase tableau simplex
// with Bland's rule; the problems here have at most a few dozen rows.
struct Lp {
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<double> c;
};

constexpr double kPivotEps = 1e-11;

class Tableau {
 public:
  explicit Tableau(const Lp& lp) : m_(lp.b.size()), nv_(lp.c.size()) {
    for (double bi : lp.b) na_ += bi < 0 ? 1 : 0;
    cols_ = nv_ + m_ + na_;
    t_.assign(m_ + 1, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m_);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double sg = lp.b[i] < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < nv_; ++j) t_[i][j] = sg * lp.A[i][j];
      t_[i][nv_ + i] = sg;
      t_[i][cols_] = sg * lp.b[i];
      if (lp.b[i] < 0) {
        t_[i][nv_ + m_ + art] = 1.0;
        basis_[i] = nv_ + m_ + art++;
      } else {
        basis_[i] = nv_ + i;
      }
    }
  }

  std::optional<std::vector<double>> solve(const std::vector<double>& c) {
    if (na_ > 0) {
      auto& z = t_[m_];
      std::fill(z.begin(), z.end(), 0.0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!artificial(basis_[i])) continue;
        for (std::size_t j = 0; j <= cols_; ++j) {
          if (!artificial(j)) z[j] -= t_[i][j];
        }
      }
      if (!iterate(cols_)) return std::nullopt;
      if (-t_[m_][cols_] > 1e-9) return std::nullopt;
      drive_out_artificials();
    }
    auto& z = t_[m_];
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t j = 0; j < nv_; ++j) z[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bj = basis_[i];
      const double cb = bj < nv_ ? c[bj] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z[j] -= cb * t_[i][j];
    }
    if (!iterate(nv_ + m_)) return std::nullopt;

    std::vector<double> x(nv_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < nv_) x[basis_[i]] = t_[i][cols_];
    }
    return x;
  }

 private:
  bool artificial(std::size_t j) const { return j >= nv_ + m_ && j < cols_; }

  void pivot(std::size_t r, std::size_t col) {
    const double p = t_[r][col];
    for (double& v : t_[r]) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = t_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  // Columns [0, limit) may enter. Returns false if unbounded.
  bool iterate(std::size_t limit) {
    for (std::size_t guard = 0; guard < 100000; ++guard) {
      std::size_t enter = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < limit; ++j) {
        if (t_[m_][j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == std::numeric_limits<std::size_t>::max()) return true;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = t_[i][enter];
        if (a <= kPivotEps) continue;
        const double ratio = t_[i][cols_] / a;
        if (ratio < best - 1e-15 || (ratio <= best + 1e-15 && leave < m_ && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
    throw InternalError("oracle simplex: iteration limit");
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < nv_ + m_; ++j) {
        if (std::abs(t_[i][j]) > kPivotEps) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t m_;
  std::size_t nv_;
  std::size_t na_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
};

void check_size(const DataSeries& d, const OracleOptions& opts) {
  if (d.size() > opts.max_n) {
    throw OracleRefusal("oracle refuses n=" + std::to_string(d.size()) + " (cap " +
                        std::to_string(opts.max_n) + ")");
  }
}

void extend(std::vector<int>& cur, std::size_t m, int last, int changes, int q,
            std::vector<SignPattern>& out) {
  if (cur.size() == m) {
    out.push_back({cur, changes});
    return;
  }
  for (int s : {1, -1}) {
    const int c = changes + (s != last ? 1 : 0);
    if (c > q) continue;
    cur.push_back(s);
    extend(cur, m, s, c, q, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SignPattern> enumerate_patterns(std::size_t n, int q, Orientation o) {
  if (q < 0) throw ArgumentError("q must be non-negative");
  std::vector<SignPattern> out;
  const std::size_t m = n >= 3 ? n - 2 : 0;
  std::vector<int> cur;
  extend(cur, m, static_cast<int>(o.first_piece), 0, q, out);
  return out;
}

PatternResult min_linf_for_pattern(const DataSeries& d, const SignPattern& p) {
  const std::size_t n = d.size();
  const std::size_t m = n >= 3 ? n - 2 : 0;
  if (p.signs.size() != m) throw ArgumentError("pattern length must be n-2");
  if (m == 0) return {0.0, std::vector<double>(d.f().begin(), d.f().end())};

  // Unknowns w_j = v_j - f_j + h in [0, 2h] and h >= 0. The pattern is
  // imposed on the deviation of v_{i+1} from the chord through i and i+2,
  // which has the sign of -c_i and is unchanged by the shift h.
  Lp lp;
  const std::size_t hv = n;
  lp.c.assign(n + 1, 0.0);
  lp.c[hv] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(n + 1, 0.0);
    row[j] = 1.0;
    row[hv] = -2.0;
    lp.A.push_back(row);
    lp.b.push_back(0.0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const double a = (d.x(i + 2) - d.x(i + 1)) / (d.x(i + 2) - d.x(i));
    const double b = 1.0 - a;
    const double fdev = d.f(i + 1) - a * d.f(i) - b * d.f(i + 2);
    const double s = p.signs[i];
    std::vector<double> row(n + 1, 0.0);
    row[i + 1] = s;
    row[i] = -s * a;
    row[i + 2] = -s * b;
    lp.A.push_back(row);
    lp.b.push_back(-s * fdev);
  }
  auto x = Tableau(lp).solve(lp.c);
  if (!x) throw InternalError("oracle LP failed");
  PatternResult r;
  r.h = std::max(0.0, (*x)[hv]);
  r.witness.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.witness[j] = (*x)[j] + d.f(j) - (*x)[hv];
  return r;
}

std::vector<OracleResult> oracle_profile(const DataSeries& d, int qmax, Orientation o,
                                         OracleOptions opts) {
  check_size(d, opts);
  if (qmax < 0) throw ArgumentError("q must be non-negative");
  std::vector<OracleResult> out(static_cast<std::size_t>(qmax) + 1);
  for (auto& r : out) r.h = std::numeric_limits<double>::infinity();
  for (const SignPattern& p : enumerate_patterns(d.size(), qmax, o)) {
    const PatternResult pr = min_linf_for_pattern(d, p);
    for (int q = p.changes; q <= qmax; ++q) {
      auto& r = out[static_cast<std::size_t>(q)];
      ++r.patterns;
      if (pr.h < r.h) {
        r.h = pr.h;
        r.witness = pr.witness;
      }
    }
  }
  return out;
}

OracleResult oracle_solve(const DataSeries& d, int q, Orientation o, OracleOptions opts) {
  return oracle_profile(d, q, o, opts).back();
}

}  // namespace ccsmooth
