#pragma once

// Synthetic test protocol: sample a known function, add uniform noise,
// smooth, and score how much of the noise was removed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsmooth/core.hpp"

namespace ccsmooth {

/// Width parameter of the peak function.
inline constexpr double kPeakWidth = 0.8;

struct ExperimentConfig {
  std::string function = "zero";  ///< zero, sine or peak
  std::size_t n = 501;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  int q = 2;
  /// Unset means both orientations, keeping the better one.
  std::optional<Orientation> orientation;
  /// 0 stands for the maximum norm.
  std::vector<double> p_norms = {2.0, 0.0};

  void validate() const;
};

struct Score {
  double p = 2.0;
  std::optional<double> value;  ///< empty when f == g
};

struct ExperimentReport {
  ExperimentConfig config;
  double h = 0.0;
  Orientation orientation_used;
  std::vector<Score> scores;
  double max_interior_error = 0.0;
  double max_end_error = 0.0;
  double max_noise = 0.0;
  /// Sign changes g itself needs under the orientation used.
  int exact_sign_changes = 0;
  double runtime_seconds = 0.0;
  std::vector<double> x, f, g, y;
};

struct GeneratedData {
  DataSeries data;
  std::vector<double> exact;
};

/// n equally spaced samples of the named function plus uniform noise in
/// [-epsilon, epsilon]; deterministic in the seed.
GeneratedData generate(const ExperimentConfig& cfg);

double exact_value(const std::string& function, double x);

/// 100 (1 - ||y - g||_p / ||f - g||_p); p = 0 means the maximum norm.
/// Throws ArgumentError when f == g.
double performance_score(const std::vector<double>& y, const std::vector<double>& g,
                         const std::vector<double>& f, double p);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Runs seeds cfg.seed, cfg.seed + 1, ... and reports medians.
struct SeriesSummary {
  std::vector<ExperimentReport> runs;
  double median_h = 0.0;
  std::vector<Score> median_scores;
  double median_interior_error = 0.0;
  double median_end_error = 0.0;
};
SeriesSummary run_series(const ExperimentConfig& cfg, std::size_t seeds);

std::string to_text(const ExperimentReport& r);
std::string to_json(const ExperimentReport& r, bool with_series = false);
std::string to_text(const SeriesSummary& s);
std::string to_json(const SeriesSummary& s);

}  // namespace ccsmooth
