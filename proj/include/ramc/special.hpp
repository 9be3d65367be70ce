#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "ramc/constants.hpp"
#include "ramc/errors.hpp"
#include "ramc/gamma_kernels.hpp"

// Beta function B(a,b), Ramanujan function R(a,b) = -psi(a) - psi(b) - 2*gamma,
// their restrictions to a fixed sum a + b = c, the zero-balanced Gaussian
// hypergeometric function F(a,b;a+b;x), and the shifted-log ratio
//
//   Q_p(x) = [ B F(a,b;a+b;x) / (p - ln(1-x)) - 1 ] / (1-x).

namespace ramc {

// Parameter pair of the hypergeometric family.  theorem_scope marks the
// region a,b in (0,1), a+b <= 1 on which the monotonicity results hold.
struct Params {
  double a;
  double b;
  bool theorem_scope;
};

inline Params make_params(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw domain_error("make_params: a and b must be positive and finite");
  const bool scope = a < 1.0 && b < 1.0 && a + b <= 1.0;
  return Params{a, b, scope};
}

// Restriction (a,b) = (x, c-x) for a fixed sum c.
struct CRestriction {
  double c;
  double x;
};

inline CRestriction make_c_restriction(double c, double x) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw domain_error("make_c_restriction: c must be positive and finite");
  if (!(x > 0.0) || !(x < c))
    throw domain_error("make_c_restriction: x must lie in (0, c)");
  return CRestriction{c, x};
}

inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("beta: arguments must be positive");
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

inline double ramanujan_r(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("ramanujan_r: arguments must be positive");
  return -digamma(a) - digamma(b) - 2.0 * kEulerGamma;
}

inline double beta_c(const CRestriction& spec) {
  if (!(spec.x > 0.0) || !(spec.x < spec.c))
    throw domain_error("beta_c: x must lie in (0, c)");
  return beta(spec.x, spec.c - spec.x);
}

inline double ramanujan_c(const CRestriction& spec) {
  if (!(spec.x > 0.0) || !(spec.x < spec.c))
    throw domain_error("ramanujan_c: x must lie in (0, c)");
  return ramanujan_r(spec.x, spec.c - spec.x);
}

namespace detail {

inline constexpr std::int64_t kSeriesCap = 10'000'000;
inline constexpr double kSeriesSwitch = 0.75;

// B(a,b) * F(a,b;a+b;x) by the Maclaurin series B * sum w_n x^n with
//   w_{n+1} = (n+a)(n+b) / ((n+1)(n+a+b)) w_n.
// Terms are positive; stop once the term falls below 1e-17 * partial sum
// (the tail is then bounded by x^{N+1}/((N+1)(1-x)) times B w_N scale).
inline double bf_direct_series(double a, double b, double x) {
  const double bab = beta(a, b);
  double term = bab;  // B * w_0 * x^0
  double sum = term;
  for (std::int64_t n = 0;; ++n) {
    term *= (n + a) * (n + b) / ((n + 1.0) * (n + a + b)) * x;
    sum += term;
    if (term <= 1e-17 * sum) break;
    if (n >= kSeriesCap)
      throw numeric_error("hyp_zero_balanced: series cap reached");
  }
  return sum;
}

// B(a,b) * F(a,b;a+b;x) near the logarithmic singularity via the classical
// connection expansion in y = 1-x:
//
//   B F = sum_{n>=0} c_n (L_n - ln y) y^n,
//   c_0 = 1, c_{n+1} = c_n (n+a)(n+b)/(n+1)^2,
//   L_0 = R(a,b), L_{n+1} = L_n + 2/(n+1) - 1/(n+a) - 1/(n+b)
//
// (A&S 15.3.10 restated for c = a+b; the n = 0 term is exactly the
// R(a,b) - ln(1-x) asymptote).
inline double bf_connection_series(double a, double b, double x) {
  const double y = 1.0 - x;
  const double log_y = std::log1p(-x);
  double c = 1.0;
  double big_l = ramanujan_r(a, b);
  double yn = 1.0;
  double sum = 0.0;
  bool prev_small = false;
  for (std::int64_t n = 0;; ++n) {
    const double term = c * (big_l - log_y) * yn;
    sum += term;
    // (L_n - ln y) can cross zero when a or b exceeds 1, so one tiny term is
    // not yet convergence
    const bool small = std::abs(term) <= 1e-17 * std::abs(sum);
    if (small && prev_small && n >= 1) break;
    prev_small = small;
    if (n >= kSeriesCap)
      throw numeric_error("hyp_zero_balanced: connection series cap reached");
    c *= (n + a) * (n + b) / ((n + 1.0) * (n + 1.0));
    big_l += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
    yn *= y;
  }
  return sum;
}

}  // namespace detail

// B(a,b) * F(a,b;a+b;x) for x in [0,1).  Kept as the primitive so that values
// near x = 1 never round-trip through the large B F / B quotient.
inline double bf_zero_balanced(const Params& prm, double x) {
  if (!(x >= 0.0) || !(x < 1.0))
    throw domain_error("hyp_zero_balanced: x must lie in [0, 1)");
  if (x == 0.0) return beta(prm.a, prm.b);
  if (x <= detail::kSeriesSwitch)
    return detail::bf_direct_series(prm.a, prm.b, x);
  return detail::bf_connection_series(prm.a, prm.b, x);
}

// F(a,b;a+b;x) for x in [0,1); valid for all a,b > 0.
inline double hyp_zero_balanced(const Params& prm, double x) {
  if (!(x >= 0.0) || !(x < 1.0))
    throw domain_error("hyp_zero_balanced: x must lie in [0, 1)");
  if (x == 0.0) return 1.0;
  return bf_zero_balanced(prm, x) / beta(prm.a, prm.b);
}

// Generalized complete elliptic integral K_a(r) = (pi/2) F(a,1-a;1;r^2).
inline double elliptic_k_generalized(double a, double r) {
  if (!(a > 0.0) || !(a <= 0.5))
    throw domain_error("elliptic_k_generalized: a must lie in (0, 1/2]");
  if (!(r > 0.0) || !(r < 1.0))
    throw domain_error("elliptic_k_generalized: r must lie in (0, 1)");
  return 0.5 * kPi * hyp_zero_balanced(make_params(a, 1.0 - a), r * r);
}

// Q_p(a,b;x) = [ B F/(p - ln(1-x)) - 1 ] / (1-x) for p > 0, x in (0,1).
// Tends to B/p - 1 as x -> 0+; for p = R(a,b) in theorem scope the value
// stays inside (B/R - 1, ab).
inline double q_p(const Params& prm, double p, double x) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw domain_error("q_p: p must be positive and finite");
  if (!(x > 0.0) || !(x < 1.0))
    throw domain_error("q_p: x must lie in (0, 1)");
  const double denom = p - std::log1p(-x);
  if (!(denom > 0.0))
    throw std::logic_error("q_p: p - ln(1-x) must be positive");
  const double bf = bf_zero_balanced(prm, x);
  return (bf / denom - 1.0) / (1.0 - x);
}

}  // namespace ramc
