#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fitraffic {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

BigRational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p/q", an integer, or a plain decimal literal ("0.35", "1e-2"
// is not accepted). Decimals are converted exactly: "0.35" -> 7/20.
BigRational parse_rational(std::string_view text);

// x^k with 0^0 = 1.
BigRational pow(const BigRational& x, unsigned k);

// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

double to_double(const BigRational& x);
std::string to_string(const BigRational& x);

}  // namespace fitraffic
