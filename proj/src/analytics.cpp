#include "fitraffic/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fitraffic {

namespace {

void check_domain(int m, int t) {
  if (m < 1) {
    throw std::invalid_argument("maximum speed m must be at least 1, got " + std::to_string(m));
  }
  if (t < 0) {
    throw std::invalid_argument("time t must be nonnegative, got " + std::to_string(t));
  }
}

void check_density(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
}

void check_density(const BigRational& rho) {
  if (rho < 0 || rho > 1) {
    throw std::invalid_argument("density must lie in [0, 1], got " + to_string(rho));
  }
}

// glibc's lgamma writes the global signgam; the _r variant does not.
double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_choose(double n, double k) {
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double s = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - s) + x;
    } else {
      carry_ += (x - s) + sum_;
    }
    sum_ = s;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double exact_block_prob(int m, int t, double rho) {
  check_domain(m, t);
  check_density(rho);
  if (rho == 0.0) {
    return 1.0;
  }
  if (rho == 1.0) {
    return 0.0;
  }
  const double T = t + 1.0;
  const double MT = (m + 1.0) * T;
  const double log_rho = std::log(rho);
  const double log_empty = std::log1p(-rho);

  // Index k = T - j counts the cars in the preimage.
  CompensatedSum sum;
  for (int k = 0; k <= t; ++k) {
    const double log_term = std::log((T - k) / T) + log_choose(MT, k) + k * log_rho + (MT - k) * log_empty;
    sum.add(std::exp(log_term));
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

BigRational exact_block_prob(int m, int t, const BigRational& rho) {
  check_domain(m, t);
  check_density(rho);
  const auto T = static_cast<unsigned>(t) + 1U;
  const auto MT = static_cast<unsigned>(m + 1) * T;
  const BigRational empty = 1 - rho;

  BigRational total = 0;
  for (unsigned k = 0; k < T; ++k) {
    const BigRational weight = pow(rho, k) * pow(empty, MT - k);
    if (weight == 0) {
      continue;
    }
    total += BigRational(BigInt(T - k) * binomial(MT, k), BigInt(T)) * weight;
  }
  return total;
}

double exact_flow(int m, int t, double rho) {
  const double value = 1.0 - rho - exact_block_prob(m, t, rho);
  return std::clamp(value, 0.0, 1.0 - rho);
}

BigRational exact_flow(int m, int t, const BigRational& rho) {
  return 1 - rho - exact_block_prob(m, t, rho);
}

BigRational hypergeometric_2f1_terminating(int t, const BigRational& c, const BigRational& z) {
  if (t < 0) {
    throw std::invalid_argument("terminating series needs t >= 0");
  }
  // term_i = (2)_i (-t)_i / ((c)_i i!) z^i, and (2)_i / i! = i + 1.
  BigRational term = 1;
  BigRational total = 1;
  for (int i = 0; i < t; ++i) {
    term *= BigRational(BigInt(i + 2), BigInt(i + 1));
    term *= BigRational(BigInt(i - t)) / (c + i);
    term *= z;
    total += term;
  }
  return total;
}

BigRational hypergeometric_flow(int m, int t, const BigRational& rho) {
  check_domain(m, t);
  check_density(rho);
  if (rho == 0) {
    return 0;
  }
  const auto T = static_cast<unsigned>(t) + 1U;
  const auto mT = static_cast<unsigned>(m) * T;
  const BigRational prefactor =
      BigRational(binomial(mT + T, T), BigInt(mT + 1)) * pow(1 - rho, mT + 1) * pow(rho, static_cast<unsigned>(t));
  const BigRational series = hypergeometric_2f1_terminating(t, BigRational(mT + 2), 1 - 1 / rho);
  return 1 - rho - prefactor * series;
}

double hypergeometric_flow(int m, int t, double rho) {
  check_domain(m, t);
  check_density(rho);
  if (rho == 0.0 || rho == 1.0) {
    return 0.0;
  }
  const double T = t + 1.0;
  const double mT = m * T;
  const double c = mT + 2.0;
  const double log_z = std::log(1.0 / rho - 1.0);  // log |1 - 1/rho|

  // For 0 < rho < 1 the argument is negative and (-t)_i alternates, so every
  // series term is positive; sum them in log space to avoid overflow.
  std::vector<double> log_terms(static_cast<std::size_t>(t) + 1);
  log_terms[0] = 0.0;
  for (int i = 0; i < t; ++i) {
    log_terms[i + 1] = log_terms[i] + std::log((i + 2.0) / (i + 1.0)) + std::log(static_cast<double>(t - i)) -
                       std::log(c + i) + log_z;
  }
  const double peak = *std::max_element(log_terms.begin(), log_terms.end());
  CompensatedSum scaled;
  for (double lt : log_terms) {
    scaled.add(std::exp(lt - peak));
  }
  const double log_series = peak + std::log(scaled.value());
  const double log_prefactor =
      log_choose(mT + T, T) - std::log(mT + 1.0) + (mT + 1.0) * std::log1p(-rho) + t * std::log(rho);
  return 1.0 - rho - std::exp(log_prefactor + log_series);
}

double steady_block_prob(int m, double rho) {
  check_domain(m, 0);
  check_density(rho);
  const double critical = 1.0 / (m + 1.0);
  return rho < critical ? 1.0 - (m + 1.0) * rho : 0.0;
}

double steady_flow(int m, double rho) {
  check_domain(m, 0);
  check_density(rho);
  const double critical = 1.0 / (m + 1.0);
  return rho < critical ? m * rho : 1.0 - rho;
}

double asymptotic_block_prob(int m, int t, double rho) {
  check_domain(m, t);
  check_density(rho);
  if (t < 1) {
    throw std::invalid_argument("asymptotic approximation needs t >= 1");
  }
  if (rho <= 0.0 || rho >= 1.0) {
    throw std::invalid_argument("asymptotic approximation needs 0 < rho < 1");
  }
  const double T = t + 1.0;
  const double M = m + 1.0;
  const double variance = M * rho * (1.0 - rho) * T;
  const double s = std::sqrt(2.0 * variance);
  const double a = 1.0 - T + M * rho * T;
  const double b = M * rho * T;

  const double gaussian_part = std::sqrt(M * rho * (1.0 - rho) / (2.0 * std::numbers::pi * T)) *
                               (std::exp(-(a * a) / (s * s)) - std::exp(-(b * b) / (s * s)));
  const double erf_part = 0.5 * (1.0 - M * rho) * (std::erf(b / s) - std::erf(a / s));
  return std::clamp(gaussian_part + erf_part, 0.0, 1.0);
}

}  // namespace fitraffic
