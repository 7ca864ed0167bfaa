// Python bindings. Exact values cross the boundary as decimal strings
// ("p/q" for rationals); the package wrapper turns them into int/Fraction.
#include "fitraffic/analytics.hpp"
#include "fitraffic/configuration.hpp"
#include "fitraffic/csv.hpp"
#include "fitraffic/engine.hpp"
#include "fitraffic/harness.hpp"
#include "fitraffic/preimage.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fitraffic;

namespace {

InitMode parse_init(const std::string& name) {
  if (name == "exact") {
    return InitMode::exact_count;
  }
  if (name == "bernoulli") {
    return InitMode::bernoulli;
  }
  throw std::invalid_argument("init must be 'exact' or 'bernoulli'");
}

SeriesParams series_params(std::size_t length, int m, double rho, int steps, std::uint64_t seed,
                           const std::string& init) {
  SeriesParams p;
  p.length = length;
  p.max_speed = m;
  p.density = rho;
  p.t_max = steps;
  p.seed = seed;
  p.init = parse_init(init);
  return p;
}

template <class T>
std::string csv_text(const T& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Deterministic traffic cellular automaton with maximum speed m";

  mod.def("step", [](const std::string& config, int m) {
    return step(Configuration::from_string(config), ModelParams(m)).to_string();
  }, py::arg("config"), py::arg("m"));
  mod.def("flow", [](const std::string& config, int m) {
    return flow(Configuration::from_string(config), ModelParams(m));
  }, py::arg("config"), py::arg("m"));
  mod.def("init_random", [](std::size_t length, double rho, std::uint64_t seed, const std::string& init) {
    return init_random(length, rho, seed, parse_init(init)).to_string();
  }, py::arg("length"), py::arg("rho"), py::arg("seed"), py::arg("init") = "exact");
  mod.def("flow_identity_residual", [](const std::string& config, int m) {
    return to_string(verify_proposition1(Configuration::from_string(config), ModelParams(m)));
  }, py::arg("config"), py::arg("m"));

  mod.def("exact_block_prob", py::overload_cast<int, int, double>(&exact_block_prob),
          py::arg("m"), py::arg("t"), py::arg("rho"));
  mod.def("exact_flow", py::overload_cast<int, int, double>(&exact_flow), py::arg("m"), py::arg("t"), py::arg("rho"));
  mod.def("hypergeometric_flow", py::overload_cast<int, int, double>(&hypergeometric_flow),
          py::arg("m"), py::arg("t"), py::arg("rho"));
  mod.def("exact_block_prob_rational", [](int m, int t, const std::string& rho) {
    return to_string(exact_block_prob(m, t, parse_rational(rho)));
  }, py::arg("m"), py::arg("t"), py::arg("rho"));
  mod.def("exact_flow_rational", [](int m, int t, const std::string& rho) {
    return to_string(exact_flow(m, t, parse_rational(rho)));
  }, py::arg("m"), py::arg("t"), py::arg("rho"));
  mod.def("steady_block_prob", &steady_block_prob, py::arg("m"), py::arg("rho"));
  mod.def("steady_flow", &steady_flow, py::arg("m"), py::arg("rho"));
  mod.def("asymptotic_block_prob", &asymptotic_block_prob, py::arg("m"), py::arg("t"), py::arg("rho"));

  mod.def("is_admissible", &is_admissible, py::arg("bits"), py::arg("m"));
  mod.def("path_count", [](long n0, long n1, int m) { return path_count(n0, n1, m).str(); },
          py::arg("n0"), py::arg("n1"), py::arg("m"));
  mod.def("enumerate_preimages", &enumerate_preimages, py::arg("m"), py::arg("n"));
  mod.def("count_preimages", [](int m, int n) { return count_preimages(m, n).str(); }, py::arg("m"), py::arg("n"));
  mod.def("windowed_evolve", &windowed_evolve, py::arg("bits"), py::arg("m"), py::arg("steps"));

  mod.def("simulate_csv", [](int m, std::size_t length, double rho, int steps, std::uint64_t seed,
                             const std::string& init, int runs) {
    const SeriesParams p = series_params(length, m, rho, steps, seed, init);
    py::gil_scoped_release release;
    return runs > 1 ? csv_text(ensemble(p, runs)) : csv_text(run_series(p));
  }, py::arg("m"), py::arg("length"), py::arg("rho"), py::arg("steps"), py::arg("seed"),
     py::arg("init") = "exact", py::arg("runs") = 1);

  mod.def("simulate", [](int m, std::size_t length, double rho, int steps, std::uint64_t seed,
                         const std::string& init) {
    const SeriesParams p = series_params(length, m, rho, steps, seed, init);
    FlowSeries s;
    {
      py::gil_scoped_release release;
      s = run_series(p);
    }
    std::vector<double> measured;
    std::vector<double> exact;
    for (const FlowRow& row : s.rows) {
      measured.push_back(row.flow_measured);
      exact.push_back(row.flow_exact);
    }
    return py::make_tuple(s.meta.rho_actual, measured, exact);
  }, py::arg("m"), py::arg("length"), py::arg("rho"), py::arg("steps"), py::arg("seed"), py::arg("init") = "exact");

  mod.def("diagram_csv", [](int m, int t, double rho_min, double rho_max, int count) {
    const std::vector<double> grid = linear_grid(rho_min, rho_max, count);
    return csv_text(fundamental_diagram(m, t, grid));
  }, py::arg("m"), py::arg("t"), py::arg("rho_min"), py::arg("rho_max"), py::arg("count"));

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const std::length_error& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

#ifdef VERSION_INFO
#define FITRAFFIC_STR_(x) #x
#define FITRAFFIC_STR(x) FITRAFFIC_STR_(x)
  mod.attr("__version__") = FITRAFFIC_STR(VERSION_INFO);
#else
  mod.attr("__version__") = "dev";
#endif
}
