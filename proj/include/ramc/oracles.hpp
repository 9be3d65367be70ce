#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "ramc/coeffs.hpp"
#include "ramc/constants.hpp"
#include "ramc/errors.hpp"
#include "ramc/quadrature.hpp"
#include "ramc/special.hpp"
#include "ramc/summation.hpp"

// Independent reference computations used to validate the main evaluation
// paths: the AGM form of the complete elliptic integral, quadrature of the
// integral representations of psi and of B_c - R_c, and the Cauchy-division
// route to the alpha coefficients.

namespace ramc::oracles {

// Complete elliptic integral K(r) = pi / (2 agm(1, sqrt(1-r^2))).
inline double agm_complete_k(double r) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw domain_error("agm_complete_k: r must lie in [0, 1)");
  double a = 1.0;
  double b = std::sqrt((1.0 - r) * (1.0 + r));
  for (int iter = 0; iter < 60; ++iter) {
    if (std::abs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * a) break;
    const double am = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = am;
  }
  return kPi / (2.0 * a);
}

namespace detail {

// Integrand of the representation of delta_c(x) = B_c(x) - R_c(x):
//   delta_c(x) = -int_0^1 [((1+t)^c - 1 + t)(t^x + t^{c-x}) - 2 t (1+t)^c]
//                          / [t (1-t)(1+t)^c] dt.
// The 1/(1-t) factor is removable: within 1e-8 of t = 1 the limit value
// c + 2^{1-c} - 2 is used.
inline double delta_c_integrand(double c, double x, double t) {
  if (1.0 - t < 1e-8) return c + std::pow(2.0, 1.0 - c) - 2.0;
  const double pc = std::pow(1.0 + t, c);
  const double num = (pc - 1.0 + t) * (std::pow(t, x) + std::pow(t, c - x)) -
                     2.0 * t * pc;
  return -num / (t * (1.0 - t) * pc);
}

}  // namespace detail

// delta_c(x) by adaptive quadrature of its integral representation.  For
// c < 2 the substitution t = s^{2/c} tames the t -> 0 endpoint.
inline QuadResult delta_c_integral(double c, double x, double tol) {
  if (!(c > 0.0)) throw domain_error("delta_c_integral: c must be positive");
  if (!(x > 0.0) || !(x < c))
    throw domain_error("delta_c_integral: x must lie in (0, c)");
  if (!(tol >= 1e-12)) throw domain_error("delta_c_integral: tol must be >= 1e-12");
  if (c < 2.0) {
    const double q = 2.0 / c;
    auto g = [c, x, q](double s) {
      return detail::delta_c_integrand(c, x, std::pow(s, q)) * q *
             std::pow(s, q - 1.0);
    };
    return integrate_adaptive(g, 0.0, 1.0, tol);
  }
  auto f = [c, x](double t) { return detail::delta_c_integrand(c, x, t); };
  return integrate_adaptive(f, 0.0, 1.0, tol);
}

// psi(x) + gamma = int_0^1 (1 - t^{x-1})/(1 - t) dt.  The returned value is
// the integral itself.  For x < 1 the t -> 0 singularity t^{x-1} is removed
// on [0, 1/2] by the substitution t = s^{1/x}, under which the integrand
// becomes (1/x)(s^{(1-x)/x} - 1)/(1 - s^{1/x}).
inline QuadResult digamma_integral(double x, double tol) {
  if (!(x > 0.0)) throw domain_error("digamma_integral: x must be positive");
  if (!(tol > 0.0)) throw domain_error("digamma_integral: tol must be positive");
  auto base = [x](double t) {
    const double u = 1.0 - t;
    if (u < 1e-8)  // removable point: limit x-1 with first-order correction
      return (x - 1.0) - 0.5 * (x - 1.0) * (x - 2.0) * u;
    return (1.0 - std::pow(t, x - 1.0)) / u;
  };
  if (x >= 1.0) return integrate_adaptive(base, 0.0, 1.0, tol);
  const double q = 1.0 / x;
  auto left = [q](double s) {
    return q * (std::pow(s, q - 1.0) - 1.0) / (1.0 - std::pow(s, q));
  };
  const double s_split = std::pow(0.5, 1.0 / q);  // t = 1/2
  const QuadResult lo = integrate_adaptive(left, 0.0, s_split, 0.5 * tol);
  const QuadResult hi = integrate_adaptive(base, 0.5, 1.0, 0.5 * tol);
  return QuadResult{lo.value + hi.value, lo.est_error + hi.est_error,
                    lo.evaluations + hi.evaluations};
}

// alpha_n recomputed by direct power-series division U(x)/V(x):
//   p alpha_n = u_n - sum_{k=1}^{n} alpha_{n-k}/k,   alpha_0 = B/p - 1,
// with compensated inner sums.  Independent of alpha_sequence's
// order-(n+1) recurrence.
inline std::vector<double> alpha_by_division(const Params& prm, double p,
                                             std::int64_t n_max,
                                             std::int64_t cap = kDefaultMaxN) {
  if (!(p > 0.0)) throw domain_error("alpha_by_division: p must be positive");
  ramc::detail::check_n_cap(n_max, cap);
  const USequences seq = u_sequences(prm, p, n_max, cap);
  std::vector<double> alpha(static_cast<std::size_t>(n_max) + 1);
  alpha[0] = beta(prm.a, prm.b) / p - 1.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    KahanSum acc;
    acc.add(seq.u[n]);
    for (std::int64_t k = 1; k <= n; ++k)
      acc.add(-alpha[n - k] / static_cast<double>(k));
    alpha[n] = acc.value() / p;
  }
  return alpha;
}

}  // namespace ramc::oracles
