#pragma once

#include "fitraffic/rational.hpp"

namespace fitraffic {

// Closed forms for the deterministic traffic rule started from a Bernoulli
// random configuration of density rho on an infinite lattice.
//
// Throughout, T = t + 1 and M = m + 1, and the block probability of
// m + 1 consecutive empty sites after t steps is
//
//   P_t = sum_{j=1}^{T} (j/T) C(MT, T-j) rho^(T-j) (1-rho)^(mT+j),
//
// with 0^0 = 1. The flow at time t is 1 - rho - P_t.
//
// Every function validates m >= 1, t >= 0 and rho in [0, 1] and throws
// std::invalid_argument otherwise. Overloads taking BigRational are exact.

/// P_t, floating point: log-gamma binomials with compensated summation.
double exact_block_prob(int m, int t, double rho);
BigRational exact_block_prob(int m, int t, const BigRational& rho);

double exact_flow(int m, int t, double rho);
BigRational exact_flow(int m, int t, const BigRational& rho);

/// The flow written as
///
///   1 - rho - (1-rho)^(mT+1) rho^t (MT)! / ((mT+1) T! (mT)!)
///             * 2F1(2, -t; 2 + mT; 1 - 1/rho),
///
/// with the Gauss hypergeometric series summed as a terminating
/// polynomial of t + 1 terms. rho = 0 returns the limit value 0.
double hypergeometric_flow(int m, int t, double rho);
BigRational hypergeometric_flow(int m, int t, const BigRational& rho);

/// The terminating series 2F1(2, -t; c; z) alone, exactly.
BigRational hypergeometric_2f1_terminating(int t, const BigRational& c, const BigRational& z);

/// t -> infinity limit of P_t: 1 - (m+1) rho below the critical density
/// 1/(m+1), zero at and above it.
double steady_block_prob(int m, double rho);

/// t -> infinity flow: m rho below 1/(m+1), 1 - rho otherwise. The maximum
/// m/(m+1) is attained at the critical density.
double steady_flow(int m, double rho);

/// Normal (de Moivre-Laplace) approximation of P_t with the sum replaced
/// by an integral:
///
///   sqrt(M rho (1-rho) / (2 pi T)) [exp(-a^2/s^2) - exp(-b^2/s^2)]
///     + (1 - M rho)/2 [erf(b/s) - erf(a/s)],
///
/// where a = 1 - T + M rho T, b = M rho T and s = sqrt(2 M rho (1-rho) T).
/// Requires t >= 1 and 0 < rho < 1. The result is clamped to [0, 1].
double asymptotic_block_prob(int m, int t, double rho);

}  // namespace fitraffic
