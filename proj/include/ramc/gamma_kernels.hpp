#pragma once

#include <cmath>
#include <cstdint>

#include "ramc/constants.hpp"
#include "ramc/errors.hpp"

// Real-valued gamma-family kernels: ln Gamma, psi and psi^(m) for m = 1..3.
//
// All three use the same scheme: shift the argument upward by the functional
// recurrences until x >= 10, then evaluate the divergent-but-truncated
// asymptotic (Stirling / de Moivre) expansion whose coefficients are ratios of
// Bernoulli numbers.  At x = 10 the first omitted term is below 1e-16 relative
// for every kernel, so the truncation is at machine level.
//
// Coefficient provenance: Abramowitz & Stegun, Handbook of Mathematical
// Functions, 6.1.41 (ln Gamma), 6.3.18 (psi), 6.4.11 (polygamma); the
// Bernoulli numbers B_2..B_16 are exact rationals.

namespace ramc {

namespace detail {

inline constexpr double kAsymptoticThreshold = 10.0;

// B_{2k}/(2k(2k-1)), k = 1..8  (A&S 6.1.41, coefficients of x^{1-2k})
inline constexpr double kLnGammaCoeff[8] = {
    1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,    -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,     -3617.0 / 122400.0};

// B_{2k}/(2k), k = 1..8  (A&S 6.3.18, coefficients of x^{-2k})
inline constexpr double kDigammaCoeff[8] = {
    1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,   1.0 / 12.0,  -3617.0 / 8160.0};

// B_{2k}, k = 1..8
inline constexpr double kBernoulli2k[8] = {
    1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0};

// ln Gamma(x) for x >= 10.
inline double ln_gamma_asymptotic(double x) {
  constexpr double half_ln_two_pi = 0.91893853320467274178032973640561764;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;  // x^{-(2k-1)}
  for (double c : kLnGammaCoeff) {
    series += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + half_ln_two_pi + series;
}

// psi(x) for x >= 10.
inline double digamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv2;  // x^{-2k}
  for (double c : kDigammaCoeff) {
    series += c * power;
    power *= inv2;
  }
  return std::log(x) - 0.5 * inv - series;
}

// psi^(m)(x) for x >= 10, m >= 1:
//   (-1)^{m-1} [ (m-1)!/x^m + m!/(2 x^{m+1})
//                + sum_k B_{2k} (2k+m-1)!/((2k)! x^{2k+m}) ]
inline double polygamma_asymptotic(int m, double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double fact_m1 = 1.0;  // (m-1)!
  for (int j = 2; j < m; ++j) fact_m1 *= j;
  const double inv_m = std::pow(inv, m);
  double sum = fact_m1 * inv_m + fact_m1 * m * 0.5 * inv_m * inv;
  double power = inv_m * inv2;  // x^{-(2k+m)}
  for (int k = 1; k <= 8; ++k) {
    // (2k+m-1)!/(2k)! = (2k+1)(2k+2)...(2k+m-1)
    double ratio = 1.0;
    for (int j = 2 * k + 1; j <= 2 * k + m - 1; ++j) ratio *= j;
    sum += kBernoulli2k[k - 1] * ratio * power;
    power *= inv2;
  }
  return (m % 2 == 1) ? sum : -sum;
}

inline void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error(std::string(who) + ": argument must be positive and finite");
}

}  // namespace detail

// ln Gamma(x), x > 0.
inline double ln_gamma(double x) {
  detail::require_positive(x, "ln_gamma");
  if (x >= detail::kAsymptoticThreshold) return detail::ln_gamma_asymptotic(x);
  // Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))
  double shift = 0.0;
  double t = x;
  while (t < detail::kAsymptoticThreshold) {
    shift += std::log(t);
    t += 1.0;
  }
  return detail::ln_gamma_asymptotic(t) - shift;
}

// psi(x) = d ln Gamma / dx, x > 0.
inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  double shift = 0.0;
  double t = x;
  while (t < detail::kAsymptoticThreshold) {
    shift += 1.0 / t;
    t += 1.0;
  }
  return detail::digamma_asymptotic(t) - shift;
}

// psi^(m)(x) for m in {1,2,3}, x > 0.  Signs: psi' > 0, psi'' < 0, psi''' > 0.
inline double polygamma(int m, double x) {
  if (m < 1 || m > 3)
    throw domain_error("polygamma: order must be 1, 2 or 3");
  detail::require_positive(x, "polygamma");
  // psi^(m)(x) = psi^(m)(x+1) + (-1)^{m-1} m!/x^{m+1}
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  double shift = 0.0;
  double t = x;
  while (t < detail::kAsymptoticThreshold) {
    shift += sign * fact * std::pow(t, -(m + 1));
    t += 1.0;
  }
  return detail::polygamma_asymptotic(m, t) + shift;
}

}  // namespace ramc
