#include "fitraffic/preimage.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fitraffic {

namespace {

void check_speed(int m) {
  if (m < 1) {
    throw std::invalid_argument("maximum speed m must be at least 1");
  }
}

void check_bits(std::string_view bits) {
  if (bits.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("binary string may only contain '0' and '1'");
  }
}

void enumerate_from(std::string& prefix, long capital, std::size_t length, int m, std::vector<std::string>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back('0');
  enumerate_from(prefix, capital + 1, length, m, out);
  prefix.back() = '1';
  if (capital - m > 0) {
    enumerate_from(prefix, capital - m, length, m, out);
  }
  prefix.pop_back();
}

}  // namespace

PreimageWindow PreimageWindow::candidate(std::string bits, int max_speed, int steps) {
  check_bits(bits);
  if (bits.size() != preimage_length(max_speed, steps)) {
    throw std::invalid_argument("an n-step preimage of 0^(m+1) has length (n+1)(m+1)");
  }
  return PreimageWindow{std::move(bits), max_speed, steps};
}

std::size_t preimage_length(int m, int n) {
  check_speed(m);
  if (n < 0) {
    throw std::invalid_argument("step count n must be nonnegative");
  }
  return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1);
}

bool is_admissible(std::string_view bits, int m) {
  check_speed(m);
  if (bits.empty()) {
    throw std::invalid_argument("admissibility needs a nonempty string");
  }
  check_bits(bits);
  long capital = 0;
  for (char c : bits) {
    capital += c == '0' ? 1 : -m;
    if (capital <= 0) {
      return false;
    }
  }
  return true;
}

bool is_admissible_by_density(std::string_view bits, int m) {
  check_speed(m);
  if (bits.empty()) {
    throw std::invalid_argument("admissibility needs a nonempty string");
  }
  check_bits(bits);
  long ones = 0;
  for (std::size_t k = 1; k <= bits.size(); ++k) {
    ones += bits[k - 1] == '1' ? 1 : 0;
    // ones < k / (m+1), kept in integers.
    if (!(ones * (m + 1) < static_cast<long>(k))) {
      return false;
    }
  }
  return true;
}

BigInt path_count(long n0, long n1, int m) {
  check_speed(m);
  if (n0 < 0 || n1 < 0) {
    throw std::invalid_argument("path_count arguments must be nonnegative");
  }
  if (n0 + n1 < 1) {
    throw std::invalid_argument("path_count needs n0 + n1 >= 1");
  }
  if (n0 <= m * n1) {
    return 0;
  }
  const BigInt scaled = BigInt(n0 - m * n1) * binomial(static_cast<unsigned>(n0 + n1), static_cast<unsigned>(n1));
  const BigInt total = n0 + n1;
  if (scaled % total != 0) {
    throw std::logic_error("lattice path count is not integral");
  }
  return scaled / total;
}

std::vector<std::string> enumerate_preimages(int m, int n) {
  const std::size_t length = preimage_length(m, n);
  if (length > kExhaustiveLimit) {
    throw std::length_error("preimage length " + std::to_string(length) + " exceeds the exhaustive limit of " +
                            std::to_string(kExhaustiveLimit));
  }
  std::vector<std::string> out;
  std::string prefix;
  prefix.reserve(length);
  enumerate_from(prefix, 0, length, m, out);
  return out;
}

BigInt count_preimages(int m, int n) {
  const auto length = static_cast<long>(preimage_length(m, n));
  BigInt total = 0;
  for (long n0 = static_cast<long>(m) * (n + 1) + 1; n0 <= length; ++n0) {
    total += path_count(n0, length - n0, m);
  }
  return total;
}

BigRational preimage_prob_sum(int m, int n, const BigRational& rho) {
  if (rho < 0 || rho > 1) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  const std::size_t length = preimage_length(m, n);
  std::vector<BigInt> by_ones(length + 1, 0);
  for (const std::string& s : enumerate_preimages(m, n)) {
    by_ones[static_cast<std::size_t>(std::count(s.begin(), s.end(), '1'))] += 1;
  }
  BigRational total = 0;
  for (std::size_t ones = 0; ones <= length; ++ones) {
    if (by_ones[ones] != 0) {
      total += BigRational(by_ones[ones]) * pow(rho, static_cast<unsigned>(ones)) *
               pow(1 - rho, static_cast<unsigned>(length - ones));
    }
  }
  return total;
}

std::string windowed_evolve(std::string_view bits, int m, int steps) {
  check_speed(m);
  check_bits(bits);
  if (steps < 0) {
    throw std::invalid_argument("step count must be nonnegative");
  }
  const auto shrink = static_cast<std::size_t>(m) + 1;
  if (bits.size() <= static_cast<std::size_t>(steps) * shrink) {
    throw std::invalid_argument("segment too short for the requested number of steps");
  }

  std::string current(bits);
  for (int s = 0; s < steps; ++s) {
    const std::size_t len = current.size();
    std::string next(len, '0');
    std::size_t pos = current.find('1');
    while (pos != std::string::npos) {
      const std::size_t ahead = current.find('1', pos + 1);
      // Past the last visible car only the empty run up to the edge is
      // known. If it reaches m the velocity is m regardless; otherwise the
      // car ends at or past the last site, which is dropped below.
      const std::size_t gap = ahead == std::string::npos ? len - 1 - pos : ahead - pos - 1;
      next[pos + std::min(gap, static_cast<std::size_t>(m))] = '1';
      pos = ahead;
    }
    current = next.substr(static_cast<std::size_t>(m), len - shrink);
  }
  return current;
}

bool brute_force_is_preimage(std::string_view bits, int m, int n) {
  const PreimageWindow window = PreimageWindow::candidate(std::string(bits), m, n);
  const std::string image = windowed_evolve(window.bits, m, n);
  return image.find('1') == std::string::npos;
}

void write_preimage_list(std::ostream& out, int m, int n) {
  out << "# m=" << m << " n=" << n << '\n';
  for (const std::string& s : enumerate_preimages(m, n)) {
    out << s << '\n';
  }
}

PreimageList read_preimage_list(std::istream& in) {
  PreimageList list;
  std::string line;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "# m=%d n=%d", &list.max_speed, &list.steps) != 2) {
    throw std::runtime_error("preimage list must start with '# m=<m> n=<n>'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    check_bits(line);
    list.strings.push_back(line);
  }
  return list;
}

}  // namespace fitraffic
