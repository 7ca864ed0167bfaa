#include "fitraffic/engine.hpp"

#include "fitraffic/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fitraffic {

ModelParams::ModelParams(int max_speed) : max_speed_(max_speed) {
  if (max_speed < 1) {
    throw std::invalid_argument("maximum speed m must be at least 1");
  }
}

Configuration init_random(std::size_t length, double rho, std::uint64_t seed, InitMode mode) {
  if (length == 0) {
    throw std::invalid_argument("lattice length must be at least 1");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  Engine engine(seed);
  std::vector<std::uint64_t> words(word_count(length), 0);
  auto set = [&](std::size_t p) { words[p / 64] |= std::uint64_t{1} << (p % 64); };

  if (mode == InitMode::bernoulli) {
    for (std::size_t i = 0; i < length; ++i) {
      if (uniform_unit(engine) < rho) {
        set(i);
      }
    }
  } else {
    const auto cars = static_cast<std::size_t>(std::llround(rho * static_cast<double>(length)));
    // Partial Fisher-Yates: the first `cars` slots become a uniform sample.
    std::vector<std::uint32_t> sites(length);
    std::iota(sites.begin(), sites.end(), 0U);
    for (std::size_t i = 0; i < cars; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_below(engine, length - i));
      std::swap(sites[i], sites[j]);
      set(sites[i]);
    }
  }
  return Configuration::from_words(length, std::move(words));
}

Configuration step(const Configuration& config, ModelParams params) {
  const std::size_t len = config.length();
  const auto m = static_cast<std::size_t>(params.max_speed());
  const std::vector<std::size_t> cars = config.car_positions();
  std::vector<std::uint64_t> next(word_count(len), 0);

  for (std::size_t k = 0; k < cars.size(); ++k) {
    const std::size_t here = cars[k];
    const std::size_t ahead = cars[(k + 1) % cars.size()];
    const std::size_t gap = (ahead + len - here - 1) % len;
    const std::size_t dest = (here + std::min(gap, m)) % len;
    next[dest / 64] |= std::uint64_t{1} << (dest % 64);
  }
  return Configuration::from_words(len, std::move(next));
}

bool local_rule(std::span<const std::uint8_t> neighborhood, int max_speed) {
  const auto m = static_cast<std::size_t>(max_speed);
  const bool self = neighborhood[m] != 0;
  const bool ahead = neighborhood[m + 1] != 0;
  if (self) {
    return ahead;
  }
  for (std::size_t k = 1; k <= m; ++k) {
    if (neighborhood[m - k] != 0) {
      return ahead || k == m;
    }
  }
  return false;
}

bool maxmin_local_rule(std::span<const std::uint8_t> neighborhood, int max_speed) {
  const auto m = static_cast<std::size_t>(max_speed);
  const int self = neighborhood[m];
  const int ahead = neighborhood[m + 1];
  const int behind = *std::max_element(neighborhood.begin(), neighborhood.begin() + static_cast<std::ptrdiff_t>(m));
  return self - std::min(self, 1 - ahead) + std::min(behind, 1 - self) != 0;
}

Configuration step_local(const Configuration& config, ModelParams params) {
  const int m = params.max_speed();
  const std::size_t len = config.length();
  if (len < static_cast<std::size_t>(m) + 2) {
    throw std::invalid_argument("step_local requires L >= m + 2");
  }
  std::vector<std::uint8_t> hood(static_cast<std::size_t>(m) + 2);
  std::vector<std::uint64_t> next(word_count(len), 0);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < hood.size(); ++j) {
      hood[j] = config.at_ring(static_cast<std::ptrdiff_t>(i + j) - m);
    }
    if (local_rule(hood, m)) {
      next[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return Configuration::from_words(len, std::move(next));
}

namespace {

template <class Fn>
void for_each_velocity(const Configuration& config, ModelParams params, Fn&& fn) {
  const std::size_t len = config.length();
  const auto m = static_cast<std::size_t>(params.max_speed());
  std::size_t first = len;
  std::size_t prev = len;
  config.for_each_car([&](std::size_t p) {
    if (prev == len) {
      first = p;
    } else {
      fn(std::min(p - prev - 1, m));
    }
    prev = p;
  });
  if (prev != len) {
    fn(std::min((first + len - prev - 1) % len, m));
  }
}

}  // namespace

VelocityField velocities(const Configuration& config, ModelParams params) {
  if (config.car_count() == 0) {
    throw std::invalid_argument("velocities undefined for a configuration without cars");
  }
  VelocityField field;
  field.values.reserve(config.car_count());
  for_each_velocity(config, params, [&](std::size_t v) { field.values.push_back(static_cast<int>(v)); });
  return field;
}

std::uint64_t velocity_sum(const Configuration& config, ModelParams params) {
  std::uint64_t total = 0;
  for_each_velocity(config, params, [&](std::size_t v) { total += v; });
  return total;
}

double flow(const Configuration& config, ModelParams params) {
  return static_cast<double>(velocity_sum(config, params)) / static_cast<double>(config.length());
}

std::size_t block_count(const Configuration& config, std::string_view pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
  if (pattern.size() > config.length()) {
    throw std::invalid_argument("pattern longer than the lattice");
  }
  if (pattern.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("pattern may only contain '0' and '1'");
  }
  const std::size_t len = config.length();
  std::size_t count = 0;
  for (std::size_t s = 0; s < len; ++s) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) {
      match = config[(s + j) % len] == (pattern[j] == '1');
    }
    count += match ? 1 : 0;
  }
  return count;
}

double block_frequency(const Configuration& config, std::string_view pattern) {
  return static_cast<double>(block_count(config, pattern)) / static_cast<double>(config.length());
}

}  // namespace fitraffic
