#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccsmooth/experiments.hpp"
#include "ccsmooth/hull.hpp"
#include "ccsmooth/join.hpp"
#include "ccsmooth/oracle.hpp"
#include "ccsmooth/solver.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ccsmooth;

namespace {

DataSeries series(std::vector<double> x, std::vector<double> f) {
  return DataSeries(std::move(x), std::move(f));
}

// x may be omitted (None) for equally spaced data.
DataSeries series(const std::optional<std::vector<double>>& x, std::vector<double> f) {
  if (!x) return DataSeries::equally_spaced(std::move(f));
  return series(*x, std::move(f));
}

}  // namespace

PYBIND11_MODULE(_ccsmooth, m) {
  m.doc() = "Best l-infinity approximation with limited changes of convexity";

  py::register_exception<OracleRefusal>(m, "OracleRefusal", PyExc_ValueError);

  py::class_<Join>(m, "Join")
      .def_readonly("s", &Join::s)
      .def_readonly("t", &Join::t)
      .def("__repr__", [](const Join& j) {
        return "Join(s=" + std::to_string(j.s) + ", t=" + std::to_string(j.t) + ")";
      });

  py::class_<Approximation>(m, "Approximation")
      .def_readonly("y", &Approximation::y)
      .def_readonly("h", &Approximation::h)
      .def_readonly("q", &Approximation::q)
      .def_property_readonly("orientation",
                             [](const Approximation& a) { return to_string(a.orientation); })
      .def_property_readonly("pieces",
                             [](const Approximation& a) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& p : a.pieces) out.emplace_back(p.first, p.last);
                               return out;
                             })
      .def_readonly("joins", &Approximation::joins)
      .def_property_readonly("vertex_set",
                             [](const Approximation& a) { return a.vertex_set.indices; })
      .def_readonly("piece_set", &Approximation::piece_set)
      .def_readonly("sign_changes_used", &Approximation::sign_changes_used)
      .def_property_readonly("certificate",
                             [](const Approximation& a) { return a.diagnostics.certificate; })
      .def_property_readonly("critical_index",
                             [](const Approximation& a) -> std::optional<std::size_t> {
                               if (!a.diagnostics.critical) return std::nullopt;
                               return a.diagnostics.critical->j_star;
                             })
      .def_property_readonly("operations",
                             [](const Approximation& a) { return a.diagnostics.operations; })
      .def("__repr__", [](const Approximation& a) {
        return "Approximation(q=" + std::to_string(a.q) + ", h=" + std::to_string(a.h) +
               ", orientation=" + to_string(a.orientation) + ")";
      });

  m.def(
      "solve",
      [](std::vector<double> f, int q, std::optional<std::vector<double>> x,
         const std::string& orientation, double tol, bool pin_endpoints) {
        const DataSeries d = series(x, std::move(f));
        SolveOptions opts;
        opts.tol.relative = tol;
        opts.pin_endpoints = pin_endpoints;
        opts.check_invariants = false;
        if (orientation == "best") return solve_best_orientation(d, q, opts);
        return solve(d, q, parse_orientation(orientation), opts);
      },
      "f"_a, "q"_a, "x"_a = py::none(), "orientation"_a = "convex-first", "tol"_a = 1e-12,
      "pin_endpoints"_a = true,
      "Best approximation to f whose second differences change sign at most q times.\n"
      "orientation is 'convex-first', 'concave-first' or 'best'. Indices are 0-based.");

  m.def(
      "best_convex",
      [](std::vector<double> f, std::optional<std::vector<double>> x, bool concave) {
        return best_convex_approximation(series(x, std::move(f)),
                                         concave ? Sign::Minus : Sign::Plus);
      },
      "f"_a, "x"_a = py::none(), "concave"_a = false);

  m.def(
      "best_convex_concave",
      [](std::vector<double> f, std::optional<std::vector<double>> x,
         const std::string& orientation) {
        return best_convex_concave(series(x, std::move(f)), parse_orientation(orientation));
      },
      "f"_a, "x"_a = py::none(), "orientation"_a = "convex-first");

  m.def(
      "oracle_solve",
      [](std::vector<double> f, int q, std::optional<std::vector<double>> x,
         const std::string& orientation) {
        const OracleResult r =
            oracle_solve(series(x, std::move(f)), q, parse_orientation(orientation));
        return py::make_tuple(r.h, r.witness);
      },
      "f"_a, "q"_a, "x"_a = py::none(), "orientation"_a = "convex-first",
      "Brute-force reference (n <= 12): returns (h, witness).");

  m.def(
      "sign_changes",
      [](std::vector<double> v, std::optional<std::vector<double>> x,
         const std::string& orientation) {
        const DataSeries d = series(x, v);
        return count_curvature_changes(d, v, parse_orientation(orientation).first_piece,
                                       Tolerance{}.absolute(d));
      },
      "v"_a, "x"_a = py::none(), "orientation"_a = "convex-first",
      "Sign changes of the second differences of v, counted from the leading sign.");

  m.def(
      "is_feasible",
      [](std::vector<double> v, int q, std::optional<std::vector<double>> x,
         const std::string& orientation) {
        const DataSeries d = series(x, v);
        return is_feasible(d, v, q, parse_orientation(orientation));
      },
      "v"_a, "q"_a, "x"_a = py::none(), "orientation"_a = "convex-first");

  m.def(
      "run_experiment",
      [](const std::string& function, std::size_t n, double epsilon, int q, std::uint64_t seed,
         const std::string& orientation) {
        ExperimentConfig cfg;
        cfg.function = function;
        cfg.n = n;
        cfg.epsilon = epsilon;
        cfg.q = q;
        cfg.seed = seed;
        if (orientation != "best") cfg.orientation = parse_orientation(orientation);
        const ExperimentReport r = run_experiment(cfg);
        py::dict out;
        out["h"] = r.h;
        out["orientation"] = to_string(r.orientation_used);
        for (const Score& s : r.scores) {
          const std::string key = s.p == 0.0 ? "P_inf" : "P_" + std::to_string(int(s.p));
          out[py::str(key)] = s.value ? py::cast(*s.value) : py::none();
        }
        out["max_interior_error"] = r.max_interior_error;
        out["max_end_error"] = r.max_end_error;
        out["x"] = r.x;
        out["f"] = r.f;
        out["g"] = r.g;
        out["y"] = r.y;
        return out;
      },
      "function"_a, "n"_a = 501, "epsilon"_a = 0.1, "q"_a = 2, "seed"_a = 1,
      "orientation"_a = "best");
}
