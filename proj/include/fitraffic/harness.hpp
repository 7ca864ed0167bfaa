#pragma once

#include "fitraffic/configuration.hpp"
#include "fitraffic/engine.hpp"
#include "fitraffic/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fitraffic {

struct SeriesParams {
  std::size_t length = 100000;
  int max_speed = 2;
  double density = 0.3;
  std::uint64_t seed = 42;
  InitMode init = InitMode::exact_count;
  int t_max = 100;
};

struct SeriesMeta {
  std::size_t length = 0;
  int max_speed = 0;
  double rho_requested = 0.0;
  // N/L of the initial state for exact-count runs; the requested density
  // for Bernoulli runs, whose theory is stated at the sampling density.
  double rho_actual = 0.0;
  std::uint64_t seed = 0;
  InitMode init = InitMode::exact_count;
  int t_max = 0;
};

struct FlowRow {
  int t;
  double flow_measured;
  double flow_exact;
};

/// Flow of one run at t = 0..t_max, each measured on the state at time t
/// (before the step to t + 1) and paired with the closed-form flow at
/// meta.rho_actual.
struct FlowSeries {
  SeriesMeta meta;
  std::vector<FlowRow> rows;
};

/// Runs one simulation. The identity flow = 1 - N/L - freq(0^(m+1)) is
/// checked exactly at t = 0, t_max/2 and t_max; a violation throws
/// std::logic_error.
FlowSeries run_series(const SeriesParams& params);

struct EnsembleRow {
  int t;
  double mean;
  double std_error;  // sample standard deviation / sqrt(runs); 0 for one run
  double min;
  double max;
  double flow_exact;
};

struct EnsembleStats {
  SeriesMeta meta;  // meta.seed is the master seed
  int runs = 0;
  std::vector<EnsembleRow> rows;
};

/// `runs` independent series; run r uses derive_seed(params.seed, r). Runs
/// execute on a thread pool and are aggregated in index order, so the
/// result does not depend on scheduling.
EnsembleStats ensemble(const SeriesParams& params, int runs, unsigned threads = 0);

struct SimulationOptions {
  std::size_t length = 100000;
  std::uint64_t seed = 42;
  int runs = 1;
  InitMode init = InitMode::exact_count;
};

struct DiagramRow {
  double rho;
  double p_exact;
  double flow_exact;
  std::optional<double> flow_measured;
  std::optional<double> std_error;
};

struct DiagramTable {
  int max_speed = 0;
  int time = 0;
  std::vector<DiagramRow> rows;
  bool has_measured = false;
};

/// count evenly spaced points from lo to hi inclusive. count == 1 requires
/// lo == hi. Throws std::invalid_argument for an empty or inverted grid.
std::vector<double> linear_grid(double lo, double hi, int count);

/// Exact P_t and flow at each density; with simulation options, also the
/// ensemble mean flow at time t (grid point i uses master seed
/// derive_seed(seed, i)).
DiagramTable fundamental_diagram(int m, int t, std::span<const double> rho_grid,
                                 const std::optional<SimulationOptions>& simulation = std::nullopt);

/// flow - (1 - N/L - freq(0^(m+1))) in exact arithmetic. Zero for every
/// configuration.
BigRational verify_proposition1(const Configuration& config, ModelParams params);

struct PreimageReport {
  int max_speed = 0;
  int steps = 0;
  std::uint64_t total = 0;
  std::uint64_t preimages = 0;
  std::uint64_t mismatches = 0;
};

/// Largest string length for verify_proposition2 (2^p strings are checked).
inline constexpr std::size_t kVerifyLimit = 24;

/// Classifies all 2^p strings of length p = (n+1)(m+1) by is_admissible
/// and by brute-force evolution.
PreimageReport verify_proposition2(int m, int n);

}  // namespace fitraffic
