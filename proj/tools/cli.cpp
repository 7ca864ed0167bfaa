#include "cli.hpp"

#include "fitraffic/analytics.hpp"
#include "fitraffic/csv.hpp"
#include "fitraffic/harness.hpp"
#include "fitraffic/preimage.hpp"
#include "fitraffic/rational.hpp"
#include "fitraffic/verification.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#ifndef FITRAFFIC_VERSION
#define FITRAFFIC_VERSION "dev"
#endif

namespace fitraffic::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A density flag: decimal ("0.3") or fraction ("1/3"). Fractions select the
// exact-rational evaluation path.
struct Density {
  BigRational exact;
  double value = 0.0;
  bool is_fraction = false;
};

Density parse_density(const std::string& flag, const std::string& text) {
  Density d;
  try {
    d.exact = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": '" + text + "' is not a decimal or p/q fraction");
  }
  if (d.exact < 0 || d.exact > 1) {
    throw UsageError(flag + ": density " + text + " outside [0, 1]");
  }
  d.value = to_double(d.exact);
  d.is_fraction = text.find('/') != std::string::npos;
  return d;
}

InitMode parse_init(const std::string& name) {
  return name == "bernoulli" ? InitMode::bernoulli : InitMode::exact_count;
}

void emit(const std::string& out_path, std::ostream& out, const std::function<void(std::ostream&)>& fill) {
  if (out_path.empty()) {
    fill(out);
    out.flush();
  } else {
    write_atomically(out_path, fill);
  }
}

struct SimulateFlags {
  int m = 2;
  std::size_t length = 100000;
  std::string density;
  int steps = 100;
  std::uint64_t seed = 42;
  std::string init = "exact";
  int runs = 1;
  std::string out;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  const Density rho = parse_density("--density", f.density);
  SeriesParams params;
  params.length = f.length;
  params.max_speed = f.m;
  params.density = rho.value;
  params.seed = f.seed;
  params.init = parse_init(f.init);
  params.t_max = f.steps;
  if (f.runs == 1) {
    const FlowSeries series = run_series(params);
    emit(f.out, out, [&](std::ostream& o) { write_csv(o, series); });
  } else {
    const EnsembleStats stats = ensemble(params, f.runs);
    emit(f.out, out, [&](std::ostream& o) { write_csv(o, stats); });
  }
  return kExitOk;
}

struct ExactFlags {
  int m = 2;
  std::string density;
  int steps = 0;
  std::string formula = "sum";
  std::string out;
};

int cmd_exact(const ExactFlags& f, std::ostream& out) {
  const Density rho = parse_density("--density", f.density);
  if (f.formula == "asymptotic") {
    if (rho.value <= 0.0 || rho.value >= 1.0) {
      throw UsageError("--density: the asymptotic formula needs 0 < density < 1");
    }
    if (f.steps < 1) {
      throw UsageError("--steps: the asymptotic formula needs at least one step");
    }
  }

  emit(f.out, out, [&](std::ostream& o) {
    fmt::print(o, "# m={}\n# density={}\n# formula={}\nt,P,flow\n", f.m, f.density, f.formula);
    if (f.formula == "steady") {
      fmt::print(o, "inf,{},{}\n", format_real(steady_block_prob(f.m, rho.value)),
                 format_real(steady_flow(f.m, rho.value)));
      return;
    }
    for (int t = f.formula == "asymptotic" ? 1 : 0; t <= f.steps; ++t) {
      double p = 0.0;
      double phi = 0.0;
      if (f.formula == "sum") {
        if (rho.is_fraction) {
          const BigRational exact = exact_block_prob(f.m, t, rho.exact);
          p = to_double(exact);
          phi = to_double(1 - rho.exact - exact);
        } else {
          p = exact_block_prob(f.m, t, rho.value);
          phi = exact_flow(f.m, t, rho.value);
        }
      } else if (f.formula == "hypergeometric") {
        if (rho.is_fraction) {
          const BigRational exact = hypergeometric_flow(f.m, t, rho.exact);
          phi = to_double(exact);
          p = to_double(1 - rho.exact - exact);
        } else {
          phi = hypergeometric_flow(f.m, t, rho.value);
          p = 1.0 - rho.value - phi;
        }
      } else {
        p = asymptotic_block_prob(f.m, t, rho.value);
        phi = 1.0 - rho.value - p;
      }
      fmt::print(o, "{},{},{}\n", t, format_real(p), format_real(phi));
    }
  });
  return kExitOk;
}

struct PreimageFlags {
  int m = 1;
  int n = 0;
  std::string action = "count";
  std::string out;
};

int cmd_preimage(const PreimageFlags& f, std::ostream& out) {
  const std::size_t length = preimage_length(f.m, f.n);
  if (f.action == "list" && length > kExhaustiveLimit) {
    throw UsageError(fmt::format("--n: preimage length (n+1)(m+1) = {} exceeds the listing limit {}", length,
                                 kExhaustiveLimit));
  }
  if (f.action == "verify" && length > kVerifyLimit) {
    throw UsageError(fmt::format("--n: preimage length (n+1)(m+1) = {} exceeds the verification limit {}", length,
                                 kVerifyLimit));
  }
  if (f.action == "count") {
    const BigInt count = count_preimages(f.m, f.n);
    emit(f.out, out, [&](std::ostream& o) { o << count.str() << '\n'; });
    return kExitOk;
  }
  if (f.action == "list") {
    emit(f.out, out, [&](std::ostream& o) {
      for (const std::string& s : enumerate_preimages(f.m, f.n)) {
        o << s << '\n';
      }
    });
    return kExitOk;
  }
  const PreimageReport report = verify_proposition2(f.m, f.n);
  emit(f.out, out, [&](std::ostream& o) { write_csv(o, report); });
  return report.mismatches == 0 ? kExitOk : kExitFailure;
}

struct DiagramFlags {
  int m = 2;
  int t = 0;
  std::string rho_min;
  std::string rho_max;
  int rho_count = 0;
  bool simulate = false;
  std::size_t length = 10000;
  std::uint64_t seed = 42;
  int runs = 1;
  std::string init = "exact";
  std::string out;
};

int cmd_diagram(const DiagramFlags& f, std::ostream& out) {
  const Density lo = parse_density("--rho-min", f.rho_min);
  const Density hi = parse_density("--rho-max", f.rho_max);
  std::vector<double> grid;
  try {
    grid = linear_grid(lo.value, hi.value, f.rho_count);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--rho-count: ") + e.what());
  }
  std::optional<SimulationOptions> simulation;
  if (f.simulate) {
    simulation = SimulationOptions{f.length, f.seed, f.runs, parse_init(f.init)};
  }
  const DiagramTable table = fundamental_diagram(f.m, f.t, grid, simulation);
  emit(f.out, out, [&](std::ostream& o) { write_csv(o, table); });
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  const bool ok = run_verification(parse_suite(suite), out);
  out.flush();
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic traffic cellular automaton: simulation, exact flow and preimage tools", "fitraffic"};
  app.set_version_flag("--version", std::string("fitraffic ") + FITRAFFIC_VERSION);
  app.require_subcommand(1);

  const auto speed = CLI::Range(1, 1000);
  const auto nonnegative = CLI::Range(0, std::numeric_limits<int>::max());
  const auto positive = CLI::Range(1, std::numeric_limits<int>::max());

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Run the automaton and record the flow at every time step");
  simulate->add_option("--m", sim.m, "Maximum speed (cells per step)")->check(speed)->capture_default_str();
  simulate->add_option("--length", sim.length, "Number of lattice sites L")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 31))
      ->capture_default_str();
  simulate->add_option("--density", sim.density, "Car density: decimal or p/q fraction")->required();
  simulate->add_option("--steps", sim.steps, "Last recorded time step")->check(nonnegative)->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Seed (master seed when --runs > 1)")->capture_default_str();
  simulate->add_option("--init", sim.init, "Initialization: exact car count or Bernoulli sites")
      ->check(CLI::IsMember({"exact", "bernoulli"}))
      ->capture_default_str();
  simulate->add_option("--runs", sim.runs, "Independent runs; more than one prints ensemble statistics")
      ->check(positive)
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Output file (default: standard output)");

  ExactFlags ex;
  auto* exact = app.add_subcommand("exact", "Evaluate the closed-form block probability and flow");
  exact->add_option("--m", ex.m, "Maximum speed")->check(speed)->capture_default_str();
  exact->add_option("--density", ex.density, "Density: decimal, or p/q for exact rational evaluation")->required();
  exact->add_option("--steps", ex.steps, "Evaluate t = 0..steps")->check(nonnegative)->capture_default_str();
  exact->add_option("--formula", ex.formula, "sum | hypergeometric | asymptotic | steady")
      ->check(CLI::IsMember({"sum", "hypergeometric", "asymptotic", "steady"}))
      ->capture_default_str();
  exact->add_option("--out", ex.out, "Output file (default: standard output)");

  PreimageFlags pre;
  auto* preimage = app.add_subcommand("preimage", "Count, list or verify preimages of the empty block 0^(m+1)");
  preimage->add_option("--m", pre.m, "Maximum speed")->check(speed)->capture_default_str();
  preimage->add_option("--n", pre.n, "Number of steps")->check(nonnegative)->capture_default_str();
  preimage->add_option("--action", pre.action, "count | list | verify")
      ->check(CLI::IsMember({"count", "list", "verify"}))
      ->capture_default_str();
  preimage->add_option("--out", pre.out, "Output file (default: standard output)");

  DiagramFlags dia;
  auto* diagram = app.add_subcommand("diagram", "Tabulate P_t and the flow over an evenly spaced density grid");
  diagram->add_option("--m", dia.m, "Maximum speed")->check(speed)->capture_default_str();
  diagram->add_option("--t", dia.t, "Time step")->check(nonnegative)->capture_default_str();
  diagram->add_option("--rho-min", dia.rho_min, "Smallest density")->required();
  diagram->add_option("--rho-max", dia.rho_max, "Largest density")->required();
  diagram->add_option("--rho-count", dia.rho_count, "Number of grid points (inclusive)")->required();
  diagram->add_flag("--simulate", dia.simulate, "Add a simulated flow column");
  diagram->add_option("--length", dia.length, "Lattice length for --simulate")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 31))
      ->capture_default_str();
  diagram->add_option("--seed", dia.seed, "Master seed for --simulate")->capture_default_str();
  diagram->add_option("--runs", dia.runs, "Runs per density for --simulate")->check(positive)->capture_default_str();
  diagram->add_option("--init", dia.init, "exact | bernoulli")
      ->check(CLI::IsMember({"exact", "bernoulli"}))
      ->capture_default_str();
  diagram->add_option("--out", dia.out, "Output file (default: standard output)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
  verify->add_option("--suite", suite, "all | prop1 | prop2 | formulas")
      ->check(CLI::IsMember({"all", "prop1", "prop2", "formulas"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    fmt::print(err, "fitraffic: {}\n", e.what());
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*exact) return cmd_exact(ex, out);
    if (*preimage) return cmd_preimage(pre, out);
    if (*diagram) return cmd_diagram(dia, out);
    if (*verify) return cmd_verify(suite, out);
  } catch (const UsageError& e) {
    fmt::print(err, "fitraffic: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "fitraffic: {}\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fitraffic::cli
