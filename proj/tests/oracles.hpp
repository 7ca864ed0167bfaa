#pragma once

// Test-only reference implementations. Nothing here calls into the
// library's evolution or counting code.

#include "fitraffic/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using fitraffic::BigInt;
using fitraffic::BigRational;

/// Car-list update on a ring held as a plain string.
inline std::string ring_step(const std::string& ring, int m) {
  const auto len = static_cast<long>(ring.size());
  std::vector<long> cars;
  for (long i = 0; i < len; ++i) {
    if (ring[static_cast<std::size_t>(i)] == '1') {
      cars.push_back(i);
    }
  }
  std::string next(ring.size(), '0');
  for (std::size_t k = 0; k < cars.size(); ++k) {
    long gap = 0;
    while (gap < len - 1 && ring[static_cast<std::size_t>((cars[k] + gap + 1) % len)] == '0') {
      ++gap;
    }
    next[static_cast<std::size_t>((cars[k] + std::min<long>(gap, m)) % len)] = '1';
  }
  return next;
}

inline std::string bits_of(std::uint64_t code, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    s[i] = (code >> (length - 1 - i)) & 1U ? '1' : '0';
  }
  return s;
}

/// Image of the block at offset m*n of `segment` after n steps, computed by
/// embedding the segment in a large ring with the given filler on both
/// sides and running the ring n steps.
inline std::string embedded_image(const std::string& segment, int m, int n, char filler) {
  const std::size_t pad = static_cast<std::size_t>((n + 1) * (m + 2) + 4);
  std::string ring = std::string(pad, filler) + segment + std::string(pad, filler);
  for (int s = 0; s < n; ++s) {
    ring = ring_step(ring, m);
  }
  const std::size_t keep = segment.size() - static_cast<std::size_t>(n) * static_cast<std::size_t>(m + 1);
  return ring.substr(pad + static_cast<std::size_t>(m) * static_cast<std::size_t>(n), keep);
}

/// C(n, k) from Pascal's triangle.
inline BigInt pascal(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j >= 1; --j) {
      row[j] += row[j - 1];
    }
  }
  return row[k];
}

inline BigRational power(const BigRational& x, unsigned k) {
  BigRational r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= x;
  }
  return r;
}

/// P_n(0^(m+1)) by brute force: every string of length (n+1)(m+1) weighted
/// by its Bernoulli probability, kept when the embedded evolution yields the
/// empty block.
inline BigRational brute_block_prob(int m, int n, const BigRational& rho) {
  const std::size_t p = static_cast<std::size_t>((n + 1) * (m + 1));
  BigRational total = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
    const std::string s = bits_of(code, p);
    if (embedded_image(s, m, n, '0').find('1') == std::string::npos) {
      const auto ones = static_cast<unsigned>(std::count(s.begin(), s.end(), '1'));
      total += power(rho, ones) * power(1 - rho, static_cast<unsigned>(p) - ones);
    }
  }
  return total;
}

/// Closed-form P_t written term by term with Pascal binomials, indexed by
/// the number of zeros i instead of the number of ones.
inline BigRational block_prob_by_zero_count(int m, int t, const BigRational& rho) {
  const unsigned p = static_cast<unsigned>((m + 1) * (t + 1));
  BigRational total = 0;
  for (unsigned i = static_cast<unsigned>(1 + m * (t + 1)); i <= p; ++i) {
    const long ones = static_cast<long>(p - i);
    const BigRational coef(BigInt(static_cast<long>(i) - m * ones) * pascal(p, p - i), BigInt(p));
    total += coef * power(rho, p - i) * power(1 - rho, i);
  }
  return total;
}

}  // namespace oracle
