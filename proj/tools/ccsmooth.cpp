// ccsmooth: smooth a data file, or run one of the synthetic experiments.
//
// Exit status: 0 success, 1 usage, 2 unreadable or malformed input,
// 3 internal failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ccsmooth/experiments.hpp"
#include "ccsmooth/io.hpp"
#include "ccsmooth/solver.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInternal = 3 };

struct SmoothArgs {
  std::string input;
  int q = 0;
  std::string orientation = "convex-first";
  double tol = 1e-12;
  std::string format = "json";
  std::string plot;
  std::string output;
  std::size_t value_column = 2;
};

struct ExperimentArgs {
  std::string name;
  std::size_t n = 501;
  double epsilon = 0.1;
  int q = 2;
  std::size_t seeds = 1;
  std::uint64_t seed = 1;
  std::string orientation = "best";
  std::string format = "text";
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int run_smooth(const SmoothArgs& a) {
  using namespace ccsmooth;
  if (a.value_column < 2) throw ArgumentError("--value-column must be at least 2");
  const DataSeries d = read_csv_file(a.input, CsvOptions{a.value_column - 1});

  SolveOptions opts;
  opts.tol.relative = a.tol;
  const Approximation approx = a.orientation == "best"
                                   ? solve_best_orientation(d, a.q, opts)
                                   : solve(d, a.q, parse_orientation(a.orientation), opts);

  const std::string text =
      a.format == "csv" ? approximation_csv(d, approx) : approximation_json(d, approx);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    write_file(a.output, text);
  }
  if (!a.plot.empty()) write_file(a.plot, render_svg(d, approx));
  return kOk;
}

int run_experiment_cmd(const ExperimentArgs& a) {
  using namespace ccsmooth;
  ExperimentConfig cfg;
  cfg.function = a.name;
  cfg.n = a.n;
  cfg.epsilon = a.epsilon;
  cfg.q = a.q;
  cfg.seed = a.seed;
  if (a.orientation != "best") cfg.orientation = parse_orientation(a.orientation);
  cfg.validate();

  if (a.seeds == 1) {
    const ExperimentReport r = run_experiment(cfg);
    std::cout << (a.format == "json" ? to_json(r) + "\n" : to_text(r));
  } else {
    const SeriesSummary s = run_series(cfg, a.seeds);
    std::cout << (a.format == "json" ? to_json(s) + "\n" : to_text(s));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best piecewise convex/concave approximation with limited sign changes"};
  app.require_subcommand(1);

  SmoothArgs sa;
  auto* smooth = app.add_subcommand("smooth", "Smooth a CSV file of x,f rows");
  smooth->add_option("--input", sa.input, "Input CSV file")->required()->check(CLI::ExistingFile);
  smooth->add_option("--q", sa.q, "Allowed sign changes of the second differences")
      ->required()
      ->check(CLI::NonNegativeNumber);
  smooth->add_option("--orientation", sa.orientation, "First piece convex or concave")
      ->check(CLI::IsMember({"convex-first", "concave-first", "best"}))
      ->capture_default_str();
  smooth->add_option("--tol", sa.tol, "Relative tolerance for sign decisions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  smooth->add_option("--format", sa.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  smooth->add_option("--plot", sa.plot, "Write an SVG plot to this file");
  smooth->add_option("--output", sa.output, "Write the result here instead of stdout");
  smooth->add_option("--value-column", sa.value_column, "1-based column holding f")
      ->capture_default_str();

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Run a synthetic noise-removal experiment");
  exp->add_option("name", ea.name, "zero, sine or peak")
      ->required()
      ->check(CLI::IsMember({"zero", "sine", "peak"}));
  exp->add_option("--n", ea.n, "Number of points")->check(CLI::PositiveNumber)->capture_default_str();
  exp->add_option("--epsilon", ea.epsilon, "Noise half-width")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  exp->add_option("--q", ea.q, "Allowed sign changes")->check(CLI::NonNegativeNumber)->capture_default_str();
  exp->add_option("--seeds", ea.seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exp->add_option("--seed", ea.seed, "First seed")->capture_default_str();
  exp->add_option("--orientation", ea.orientation, "convex-first, concave-first or best")
      ->check(CLI::IsMember({"convex-first", "concave-first", "best"}))
      ->capture_default_str();
  exp->add_option("--format", ea.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*smooth) return run_smooth(sa);
    return run_experiment_cmd(ea);
  } catch (const ccsmooth::ParseError& e) {
    std::cerr << "error: " << sa.input << ": " << e.what() << "\n";
    return kParse;
  } catch (const ccsmooth::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ccsmooth::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
