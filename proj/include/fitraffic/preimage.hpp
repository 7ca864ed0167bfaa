#pragma once

#include "fitraffic/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fitraffic {

// Preimages of the block of m + 1 empty sites.
//
// An n-step preimage of 0^(m+1) is a string of length (n+1)(m+1). A
// string is m-admissible when the running "capital" (start at 0, add 1
// for every 0, subtract m for every 1) stays strictly positive after every
// prefix; admissible strings are exactly those preimages. Admissible
// strings with n0 zeros and n1 ones correspond to lattice paths from the
// origin to (n0, n1) that never touch the line x = m y.

/// Largest string length handled by exhaustive enumeration.
inline constexpr std::size_t kExhaustiveLimit = 32;

/// A candidate n-step preimage. Construction enforces the length
/// (n+1)(m+1) and the 0/1 alphabet.
struct PreimageWindow {
  std::string bits;
  int max_speed;
  int steps;

  static PreimageWindow candidate(std::string bits, int max_speed, int steps);
};

/// (n+1)(m+1); throws for m < 1 or n < 0.
std::size_t preimage_length(int m, int n);

/// Capital-walk test. Throws std::invalid_argument for an empty string,
/// m < 1 or characters other than '0'/'1'.
bool is_admissible(std::string_view bits, int m);

/// Equivalent density form: every prefix of length k holds fewer than
/// k/(m+1) ones.
bool is_admissible_by_density(std::string_view bits, int m);

/// Number of admissible strings with n0 zeros and n1 ones:
/// (n0 - m n1)/(n0 + n1) * C(n0 + n1, n1) when n0 > m n1, else 0.
BigInt path_count(long n0, long n1, int m);

/// All admissible strings of length (n+1)(m+1), lexicographically ordered.
/// Throws std::length_error past kExhaustiveLimit.
std::vector<std::string> enumerate_preimages(int m, int n);

/// Size of enumerate_preimages(m, n) from path counts; no length limit.
BigInt count_preimages(int m, int n);

/// Sum over admissible strings a of rho^(#ones) (1-rho)^(#zeros).
BigRational preimage_prob_sum(int m, int n, const BigRational& rho);

/// Evolves a finite segment, keeping only sites fully determined by it:
/// each step drops m sites on the left and one on the right. Requires
/// length > steps (m + 1).
std::string windowed_evolve(std::string_view bits, int m, int steps);

/// True iff windowed_evolve(bits, m, n) is all zeros. bits must have
/// length (n+1)(m+1).
bool brute_force_is_preimage(std::string_view bits, int m, int n);

/// Regression file format: a "# m=<m> n=<n>" line, then one admissible
/// string per line.
void write_preimage_list(std::ostream& out, int m, int n);

struct PreimageList {
  int max_speed = 0;
  int steps = 0;
  std::vector<std::string> strings;
};

PreimageList read_preimage_list(std::istream& in);

}  // namespace fitraffic
