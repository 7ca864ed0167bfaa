#pragma once

#include "fitraffic/configuration.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fitraffic {

/// Maximum speed m of the deterministic traffic rule (cells per step).
/// m = 1 is elementary rule 184.
class ModelParams {
 public:
  explicit ModelParams(int max_speed);
  int max_speed() const noexcept { return max_speed_; }

 private:
  int max_speed_;
};

enum class InitMode {
  exact_count,  // exactly round(rho * L) cars at distinct uniform sites
  bernoulli,    // each site occupied independently with probability rho
};

/// Random initial state. The same (length, rho, seed, mode) always yields
/// the same configuration.
Configuration init_random(std::size_t length, double rho, std::uint64_t seed,
                          InitMode mode = InitMode::exact_count);

/// One synchronous update: every car advances min(gap, m) sites, where gap
/// is the number of empty sites before the next car on the ring.
Configuration step(const Configuration& config, ModelParams params);

/// The same update evaluated site by site from the neighborhood
/// s(i-m) .. s(i+1) with local_rule. Requires L >= m + 2.
Configuration step_local(const Configuration& config, ModelParams params);

/// New state of site i from its m + 2 neighbors, ordered
/// s(i-m), ..., s(i-1), s(i), s(i+1).
///
/// An occupied site stays occupied iff the site ahead is occupied. An empty
/// site receives the nearest car behind it (distance k <= m) iff that car
/// stops exactly here: either k == m, or the site ahead is occupied.
bool local_rule(std::span<const std::uint8_t> neighborhood, int max_speed);

/// The max/min closed form
///   s_i - min(s_i, 1 - s_{i+1}) + min(max(s_{i-m}, ..., s_{i-1}), 1 - s_i).
/// It agrees with local_rule for m = 1 but fills every empty site within
/// reach of a car for m >= 2, so it does not conserve cars there. Kept for
/// the regression test that documents the difference.
bool maxmin_local_rule(std::span<const std::uint8_t> neighborhood, int max_speed);

struct VelocityField {
  std::vector<int> values;  // one per car, in increasing site order
};

/// Per-car velocities min(gap, m). A lone car's gap is L - 1.
/// Throws std::invalid_argument for a configuration without cars.
VelocityField velocities(const Configuration& config, ModelParams params);

/// Sum of all car velocities (zero without cars).
std::uint64_t velocity_sum(const Configuration& config, ModelParams params);

/// (1/L) * sum of velocities, i.e. density times mean velocity.
double flow(const Configuration& config, ModelParams params);

/// Number of start positions s in [0, L) where the pattern matches
/// s, s+1, ... read around the ring. Overlapping matches all count.
std::size_t block_count(const Configuration& config, std::string_view pattern);

double block_frequency(const Configuration& config, std::string_view pattern);

}  // namespace fitraffic
