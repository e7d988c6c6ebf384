#include "ccsmooth/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ccsmooth/solver.hpp"
#include "json.hpp"

namespace ccsmooth {

namespace {

struct Interval {
  double lo, hi;
};

Interval domain(const std::string& function) {
  if (function == "zero" || function == "peak") return {-5.0, 5.0};
  if (function == "sine") return {-2.0, 2.0};
  throw ArgumentError("unknown experiment function '" + function + "'");
}

double norm(const std::vector<double>& a, const std::vector<double>& b, double p) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double e = std::abs(a[j] - b[j]);
    acc = p == 0.0 ? std::max(acc, e) : acc + std::pow(e, p);
  }
  return p == 0.0 ? acc : std::pow(acc, 1.0 / p);
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string p_name(double p) {
  if (p == 0.0) return "P_inf";
  std::ostringstream os;
  os << "P_" << p;
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["function"] = c.function;
  j["n"] = c.n;
  j["epsilon"] = c.epsilon;
  j["seed"] = c.seed;
  j["q"] = c.q;
  j["orientation"] = c.orientation ? to_string(*c.orientation) : "best";
  return j;
}

void put_scores(nlohmann::json& j, const std::vector<Score>& scores) {
  for (const Score& s : scores) {
    j[p_name(s.p)] = s.value ? nlohmann::json(*s.value) : nlohmann::json(nullptr);
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  domain(function);
  if (n < 1) throw ArgumentError("n must be at least 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw ArgumentError("epsilon must be >= 0");
  if (q < 0) throw ArgumentError("q must be non-negative");
  for (double p : p_norms) {
    if (!(p == 0.0 || p >= 1.0)) throw ArgumentError("p must be >= 1 (or 0 for max norm)");
  }
}

double exact_value(const std::string& function, double x) {
  if (function == "zero") return 0.0;
  if (function == "sine") return std::sin(std::numbers::pi * x);
  if (function == "peak") {
    const double s = kPeakWidth;
    return std::exp(-x * x / (2.0 * s * s)) / std::sqrt(2.0 * std::numbers::pi * s * s);
  }
  throw ArgumentError("unknown experiment function '" + function + "'");
}

GeneratedData generate(const ExperimentConfig& cfg) {
  cfg.validate();
  const Interval dom = domain(cfg.function);
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> x(cfg.n), f(cfg.n), g(cfg.n);
  for (std::size_t j = 0; j < cfg.n; ++j) {
    x[j] = cfg.n == 1 ? 0.5 * (dom.lo + dom.hi)
                      : dom.lo + (dom.hi - dom.lo) * static_cast<double>(j) /
                                     static_cast<double>(cfg.n - 1);
    g[j] = exact_value(cfg.function, x[j]);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    f[j] = g[j] + cfg.epsilon * (2.0 * u - 1.0);
  }
  return {DataSeries(std::move(x), std::move(f)), std::move(g)};
}

double performance_score(const std::vector<double>& y, const std::vector<double>& g,
                         const std::vector<double>& f, double p) {
  if (y.size() != g.size() || f.size() != g.size()) {
    throw ArgumentError("performance_score: length mismatch");
  }
  const double noise = norm(f, g, p);
  if (noise == 0.0) throw ArgumentError("performance_score: undefined when f == g");
  return 100.0 * (1.0 - norm(y, g, p) / noise);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  GeneratedData gen = generate(cfg);
  const DataSeries& d = gen.data;
  ExperimentReport r;
  r.config = cfg;

  const auto t0 = std::chrono::steady_clock::now();
  SolveOptions opts;
  opts.check_invariants = false;
  const Approximation a = cfg.orientation ? solve(d, cfg.q, *cfg.orientation, opts)
                                          : solve_best_orientation(d, cfg.q, opts);
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  r.h = a.h;
  r.orientation_used = a.orientation;
  r.x.assign(d.x().begin(), d.x().end());
  r.f.assign(d.f().begin(), d.f().end());
  r.g = gen.exact;
  r.y = a.y;

  for (double p : cfg.p_norms) {
    Score s{p, std::nullopt};
    if (norm(r.f, r.g, p) > 0.0) s.value = performance_score(r.y, r.g, r.f, p);
    r.scores.push_back(s);
  }

  const std::size_t n = d.size();
  const std::size_t ends = n / 20;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::abs(r.y[j] - r.g[j]);
    if (j < ends || j + ends >= n) {
      r.max_end_error = std::max(r.max_end_error, e);
    } else {
      r.max_interior_error = std::max(r.max_interior_error, e);
    }
    r.max_noise = std::max(r.max_noise, std::abs(r.f[j] - r.g[j]));
  }
  r.exact_sign_changes = count_curvature_changes(d, r.g, a.orientation.first_piece,
                                                 Tolerance{}.absolute(d));
  return r;
}

SeriesSummary run_series(const ExperimentConfig& cfg, std::size_t seeds) {
  if (seeds < 1) throw ArgumentError("seeds must be at least 1");
  SeriesSummary s;
  for (std::size_t k = 0; k < seeds; ++k) {
    ExperimentConfig c = cfg;
    c.seed = cfg.seed + k;
    s.runs.push_back(run_experiment(c));
  }
  std::vector<double> hs, interior, ends;
  for (const auto& r : s.runs) {
    hs.push_back(r.h);
    interior.push_back(r.max_interior_error);
    ends.push_back(r.max_end_error);
  }
  s.median_h = median(hs);
  s.median_interior_error = median(interior);
  s.median_end_error = median(ends);
  for (std::size_t i = 0; i < cfg.p_norms.size(); ++i) {
    std::vector<double> vals;
    for (const auto& r : s.runs) {
      if (r.scores[i].value) vals.push_back(*r.scores[i].value);
    }
    Score m{cfg.p_norms[i], std::nullopt};
    if (!vals.empty()) m.value = median(vals);
    s.median_scores.push_back(m);
  }
  return s;
}

std::string to_text(const ExperimentReport& r) {
  std::ostringstream os;
  os << "function=" << r.config.function << "\n"
     << "n=" << r.config.n << "\n"
     << "epsilon=" << fmt(r.config.epsilon) << "\n"
     << "seed=" << r.config.seed << "\n"
     << "q=" << r.config.q << "\n"
     << "orientation=" << to_string(r.orientation_used) << "\n"
     << "h=" << fmt(r.h) << "\n";
  for (const Score& s : r.scores) {
    os << p_name(s.p) << "=" << (s.value ? fmt(*s.value) : "undefined") << "\n";
  }
  os << "max_interior_error=" << fmt(r.max_interior_error) << "\n"
     << "max_end_error=" << fmt(r.max_end_error) << "\n"
     << "max_noise=" << fmt(r.max_noise) << "\n"
     << "exact_sign_changes=" << r.exact_sign_changes << "\n"
     << "runtime_seconds=" << fmt(r.runtime_seconds) << "\n";
  return os.str();
}

std::string to_json(const ExperimentReport& r, bool with_series) {
  nlohmann::json j;
  j["config"] = config_json(r.config);
  j["orientation"] = to_string(r.orientation_used);
  j["h"] = r.h;
  put_scores(j, r.scores);
  j["max_interior_error"] = r.max_interior_error;
  j["max_end_error"] = r.max_end_error;
  j["max_noise"] = r.max_noise;
  j["exact_sign_changes"] = r.exact_sign_changes;
  j["runtime_seconds"] = r.runtime_seconds;
  if (with_series) {
    j["x"] = r.x;
    j["f"] = r.f;
    j["g"] = r.g;
    j["y"] = r.y;
  }
  return j.dump(2);
}

std::string to_text(const SeriesSummary& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.runs.size(); ++k) {
    const auto& r = s.runs[k];
    os << "run." << k << ".seed=" << r.config.seed << "\n"
       << "run." << k << ".h=" << fmt(r.h) << "\n";
    for (const Score& sc : r.scores) {
      os << "run." << k << "." << p_name(sc.p) << "="
         << (sc.value ? fmt(*sc.value) : "undefined") << "\n";
    }
  }
  os << "seeds=" << s.runs.size() << "\n"
     << "median_h=" << fmt(s.median_h) << "\n";
  for (const Score& sc : s.median_scores) {
    os << "median_" << p_name(sc.p) << "=" << (sc.value ? fmt(*sc.value) : "undefined") << "\n";
  }
  os << "median_max_interior_error=" << fmt(s.median_interior_error) << "\n"
     << "median_max_end_error=" << fmt(s.median_end_error) << "\n";
  return os.str();
}

std::string to_json(const SeriesSummary& s) {
  nlohmann::json j;
  if (!s.runs.empty()) j["config"] = config_json(s.runs.front().config);
  j["seeds"] = s.runs.size();
  j["median_h"] = s.median_h;
  nlohmann::json med;
  put_scores(med, s.median_scores);
  j["median"] = med;
  j["median_max_interior_error"] = s.median_interior_error;
  j["median_max_end_error"] = s.median_end_error;
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : s.runs) runs.push_back(nlohmann::json::parse(to_json(r)));
  j["runs"] = runs;
  return j.dump(2);
}

}  // namespace ccsmooth
