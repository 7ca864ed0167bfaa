#include "fitraffic/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fitraffic {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

BigRational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  // The Boost rational constructor rejects negative denominators.
  BigInt n(num);
  BigInt d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return BigRational(n, d);
}

BigRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  BigRational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(body.substr(0, slash), text);
    BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    value = BigRational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = BigRational(whole * scale + frac, scale);
  } else {
    value = BigRational(parse_integer(body, text));
  }
  return negative ? BigRational(-value) : value;
}

BigRational pow(const BigRational& x, unsigned k) {
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(x), k);
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(x), k);
  return BigRational(num, den);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double to_double(const BigRational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (num == 0) {
    return 0.0;
  }
  const bool negative = num < 0;
  if (negative) {
    num = -num;
  }
  // Scale so the integer quotient carries 64+ significant bits.
  const long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num)) + 66;
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  const unsigned extra = boost::multiprecision::msb(q) > 62 ? boost::multiprecision::msb(q) - 62 : 0;
  // Keep a sticky bit so the final rounding to double is not biased.
  BigInt rem = q & ((BigInt(1) << extra) - 1);
  q >>= extra;
  auto top = static_cast<std::uint64_t>(q);
  if (rem != 0) {
    top |= 1;
  }
  double result = std::ldexp(static_cast<double>(top), static_cast<int>(extra) - static_cast<int>(shift));
  return negative ? -result : result;
}

std::string to_string(const BigRational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) {
    return boost::multiprecision::numerator(x).str();
  }
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

}  // namespace fitraffic
