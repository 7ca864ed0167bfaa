#include "fitraffic/harness.hpp"

#include "fitraffic/analytics.hpp"
#include "fitraffic/preimage.hpp"
#include "fitraffic/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace fitraffic {

namespace {

SeriesMeta describe(const SeriesParams& params, const Configuration& initial) {
  SeriesMeta meta;
  meta.length = params.length;
  meta.max_speed = params.max_speed;
  meta.rho_requested = params.density;
  meta.rho_actual = params.init == InitMode::exact_count
                        ? static_cast<double>(initial.car_count()) / static_cast<double>(params.length)
                        : params.density;
  meta.seed = params.seed;
  meta.init = params.init;
  meta.t_max = params.t_max;
  return meta;
}

std::vector<double> exact_flow_curve(int m, int t_max, double rho) {
  std::vector<double> out(static_cast<std::size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t) {
    out[static_cast<std::size_t>(t)] = exact_flow(m, t, rho);
  }
  return out;
}

std::vector<double> measure(const SeriesParams& params, Configuration state) {
  const ModelParams model(params.max_speed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(params.t_max) + 1);
  for (int t = 0; t <= params.t_max; ++t) {
    if (t == 0 || t == params.t_max / 2 || t == params.t_max) {
      if (verify_proposition1(state, model) != 0) {
        throw std::logic_error("flow identity violated at t = " + std::to_string(t));
      }
    }
    out.push_back(flow(state, model));
    if (t < params.t_max) {
      state = step(state, model);
    }
  }
  return out;
}

void check_series_params(const SeriesParams& params) {
  if (params.t_max < 0) {
    throw std::invalid_argument("t_max must be nonnegative");
  }
  static_cast<void>(ModelParams(params.max_speed));
}

}  // namespace

FlowSeries run_series(const SeriesParams& params) {
  check_series_params(params);
  Configuration initial = init_random(params.length, params.density, params.seed, params.init);
  FlowSeries series;
  series.meta = describe(params, initial);
  const std::vector<double> measured = measure(params, std::move(initial));
  const std::vector<double> exact = exact_flow_curve(params.max_speed, params.t_max, series.meta.rho_actual);
  series.rows.reserve(measured.size());
  for (std::size_t t = 0; t < measured.size(); ++t) {
    series.rows.push_back({static_cast<int>(t), measured[t], exact[t]});
  }
  return series;
}

EnsembleStats ensemble(const SeriesParams& params, int runs, unsigned threads) {
  check_series_params(params);
  if (runs < 1) {
    throw std::invalid_argument("ensemble needs at least one run");
  }
  std::vector<std::vector<double>> per_run(static_cast<std::size_t>(runs));
  std::vector<double> densities(static_cast<std::size_t>(runs));

  auto run_one = [&](std::size_t r) {
    SeriesParams p = params;
    p.seed = derive_seed(params.seed, r);
    Configuration initial = init_random(p.length, p.density, p.seed, p.init);
    densities[r] = describe(p, initial).rho_actual;
    per_run[r] = measure(p, std::move(initial));
  };

  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(runs));
  if (threads <= 1) {
    for (std::size_t r = 0; r < per_run.size(); ++r) {
      run_one(r);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t r = next++; r < per_run.size(); r = next++) {
              run_one(r);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  EnsembleStats stats;
  stats.runs = runs;
  stats.meta.length = params.length;
  stats.meta.max_speed = params.max_speed;
  stats.meta.rho_requested = params.density;
  // Exact-count runs share N = round(rho L), so every run has this density.
  stats.meta.rho_actual = densities.front();
  stats.meta.seed = params.seed;
  stats.meta.init = params.init;
  stats.meta.t_max = params.t_max;

  const std::vector<double> exact = exact_flow_curve(params.max_speed, params.t_max, stats.meta.rho_actual);
  for (int t = 0; t <= params.t_max; ++t) {
    const auto ti = static_cast<std::size_t>(t);
    double sum = 0.0;
    double lo = per_run.front()[ti];
    double hi = lo;
    for (const auto& run : per_run) {
      sum += run[ti];
      lo = std::min(lo, run[ti]);
      hi = std::max(hi, run[ti]);
    }
    const double mean = std::clamp(sum / runs, lo, hi);
    double squares = 0.0;
    for (const auto& run : per_run) {
      squares += (run[ti] - mean) * (run[ti] - mean);
    }
    const double std_error = runs > 1 ? std::sqrt(squares / (runs - 1)) / std::sqrt(static_cast<double>(runs)) : 0.0;
    stats.rows.push_back({t, mean, std_error, lo, hi, exact[ti]});
  }
  return stats;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1) {
    throw std::invalid_argument("density grid must have at least one point");
  }
  if (!(lo <= hi)) {
    throw std::invalid_argument("density grid is inverted (rho-min > rho-max)");
  }
  if (lo < 0.0 || hi > 1.0) {
    throw std::invalid_argument("density grid must lie in [0, 1]");
  }
  if (count == 1) {
    if (lo != hi) {
      throw std::invalid_argument("a one-point grid needs rho-min == rho-max");
    }
    return {lo};
  }
  if (lo == hi) {
    throw std::invalid_argument("grid with several points needs rho-min < rho-max");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  grid.back() = hi;
  return grid;
}

DiagramTable fundamental_diagram(int m, int t, std::span<const double> rho_grid,
                                 const std::optional<SimulationOptions>& simulation) {
  for (std::size_t i = 1; i < rho_grid.size(); ++i) {
    if (!(rho_grid[i] > rho_grid[i - 1])) {
      throw std::invalid_argument("density grid must be strictly increasing");
    }
  }
  DiagramTable table;
  table.max_speed = m;
  table.time = t;
  table.has_measured = simulation.has_value();
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    const double rho = rho_grid[i];
    DiagramRow row{rho, exact_block_prob(m, t, rho), exact_flow(m, t, rho), std::nullopt, std::nullopt};
    if (simulation) {
      SeriesParams params;
      params.length = simulation->length;
      params.max_speed = m;
      params.density = rho;
      params.seed = derive_seed(simulation->seed, i);
      params.init = simulation->init;
      params.t_max = t;
      const EnsembleStats stats = ensemble(params, simulation->runs);
      row.flow_measured = stats.rows.back().mean;
      row.std_error = stats.rows.back().std_error;
    }
    table.rows.push_back(row);
  }
  return table;
}

BigRational verify_proposition1(const Configuration& config, ModelParams params) {
  const BigInt length = config.length();
  const BigRational measured(BigInt(velocity_sum(config, params)), length);
  const std::string empty_block(static_cast<std::size_t>(params.max_speed()) + 1, '0');
  const BigRational predicted =
      1 - BigRational(BigInt(config.car_count()), length) - BigRational(BigInt(block_count(config, empty_block)), length);
  return measured - predicted;
}

PreimageReport verify_proposition2(int m, int n) {
  const std::size_t length = preimage_length(m, n);
  if (length > kVerifyLimit) {
    throw std::length_error("exhaustive verification is limited to strings of length " +
                            std::to_string(kVerifyLimit));
  }
  PreimageReport report;
  report.max_speed = m;
  report.steps = n;
  report.total = std::uint64_t{1} << length;
  std::string bits(length, '0');
  for (std::uint64_t code = 0; code < report.total; ++code) {
    for (std::size_t i = 0; i < length; ++i) {
      bits[i] = (code >> (length - 1 - i)) & 1U ? '1' : '0';
    }
    const bool admissible = is_admissible(bits, m);
    report.preimages += admissible ? 1 : 0;
    report.mismatches += admissible != brute_force_is_preimage(bits, m, n) ? 1 : 0;
  }
  return report;
}

}  // namespace fitraffic
