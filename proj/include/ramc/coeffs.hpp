#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "ramc/errors.hpp"
#include "ramc/special.hpp"
#include "ramc/summation.hpp"

// Integer-indexed sequences attached to Q_p(x) = sum alpha_n x^n:
//
//   w_n      Maclaurin coefficients of F(a,b;a+b;x)
//   u*_n     coefficients of U*(x) = B F - p + ln(1-x)
//   u_n      coefficients of U(x) = U*(x)/(1-x)  (prefix sums of u*)
//   alpha_n  coefficients of Q_p = U/V with V(x) = p - ln(1-x)
//   d_n      (n+1) u_{n+1} - n u_n            (n >= 1)
//   theta_n  n B w_n (n+a+b+ab)/(n+a+b)       (n >= 1)
//
// The weights of V are v_0 = p, v_n = 1/n; they appear implicitly in the
// recurrences below.

namespace ramc {

inline constexpr std::int64_t kDefaultMaxN = 10'000'000;

namespace detail {
inline void check_n_cap(std::int64_t n_max, std::int64_t cap) {
  if (n_max < 0) throw domain_error("n_max must be non-negative");
  if (n_max > cap) throw size_error("n_max exceeds the configured cap");
}
}  // namespace detail

// w_0 = 1, w_{n+1} = (n+a)(n+b)/((n+1)(n+a+b)) w_n.
inline std::vector<double> w_sequence(const Params& prm, std::int64_t n_max,
                                      std::int64_t cap = kDefaultMaxN) {
  detail::check_n_cap(n_max, cap);
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  for (std::int64_t n = 0; n < n_max; ++n)
    w[n + 1] = (n + prm.a) * (n + prm.b) / ((n + 1.0) * (n + prm.a + prm.b)) * w[n];
  return w;
}

struct USequences {
  std::vector<double> u_star;  // u*_0 = B - p, u*_k = B w_k - 1/k
  std::vector<double> u;       // u_n = sum_{k<=n} u*_k
};

// Sum of all u*_k equals R(a,b) - p; partial sums u_n approach it from above.
inline USequences u_sequences(const Params& prm, double p, std::int64_t n_max,
                              std::int64_t cap = kDefaultMaxN) {
  detail::check_n_cap(n_max, cap);
  const double b_val = beta(prm.a, prm.b);
  USequences seq;
  seq.u_star.resize(static_cast<std::size_t>(n_max) + 1);
  seq.u.resize(static_cast<std::size_t>(n_max) + 1);
  seq.u_star[0] = b_val - p;
  KahanSum run;
  run.add(seq.u_star[0]);
  seq.u[0] = run.value();
  double w = 1.0;
  for (std::int64_t k = 1; k <= n_max; ++k) {
    const std::int64_t n = k - 1;
    w *= (n + prm.a) * (n + prm.b) / ((n + 1.0) * (n + prm.a + prm.b));
    seq.u_star[k] = b_val * w - 1.0 / static_cast<double>(k);
    run.add(seq.u_star[k]);
    seq.u[k] = run.value();
  }
  return seq;
}

// alpha_n by the order-(n+1) recurrence
//   p (n+1) alpha_{n+1} = [(n+1) u_{n+1} - n u_n] + n (p - (n+1)/n) alpha_n
//                         + sum_{k=1}^{n-1} (n-k)/(k(k+1)) alpha_{n-k}
// seeded with the closed forms alpha_0 = B/p - 1 and alpha_1 = -S(p)/p^2.
// Cost is O(n_max^2).
inline std::vector<double> alpha_sequence(const Params& prm, double p,
                                          std::int64_t n_max,
                                          std::int64_t cap = kDefaultMaxN) {
  if (!(p > 0.0)) throw domain_error("alpha_sequence: p must be positive");
  detail::check_n_cap(n_max, cap);
  const double b_val = beta(prm.a, prm.b);
  std::vector<double> alpha(static_cast<std::size_t>(n_max) + 1);
  alpha[0] = b_val / p - 1.0;
  if (n_max == 0) return alpha;
  const double s_of_p =
      p * p - b_val * (prm.a + prm.b + prm.a * prm.b) / (prm.a + prm.b) * p + b_val;
  alpha[1] = -s_of_p / (p * p);
  const USequences seq = u_sequences(prm, p, n_max, cap);
  for (std::int64_t n = 1; n < n_max; ++n) {
    KahanSum acc;
    acc.add((n + 1.0) * seq.u[n + 1] - n * seq.u[n]);
    acc.add(n * (p - (n + 1.0) / n) * alpha[n]);
    for (std::int64_t k = 1; k < n; ++k)
      acc.add(static_cast<double>(n - k) / (k * (k + 1.0)) * alpha[n - k]);
    alpha[n + 1] = acc.value() / (p * (n + 1.0));
  }
  return alpha;
}

struct DThetaSequences {
  std::vector<double> d;      // valid for n >= 1; d[0] is a NaN sentinel
  std::vector<double> theta;  // valid for n >= 1; theta[0] is a NaN sentinel
};

// d_n decreases to R(a,b) - p; theta_n increases to 1 (theorem scope).
// Identity d_n - d_{n-1} = (theta_n - 1)/n.
inline DThetaSequences d_theta_sequences(const Params& prm, double p,
                                         std::int64_t n_max,
                                         std::int64_t cap = kDefaultMaxN) {
  if (n_max < 1) throw domain_error("d_theta_sequences: n_max must be >= 1");
  detail::check_n_cap(n_max, cap);
  const double b_val = beta(prm.a, prm.b);
  const double ab_sum = prm.a + prm.b;
  const double ab_prod = prm.a * prm.b;
  DThetaSequences seq;
  seq.d.assign(static_cast<std::size_t>(n_max) + 1,
               std::numeric_limits<double>::quiet_NaN());
  seq.theta.assign(static_cast<std::size_t>(n_max) + 1,
                   std::numeric_limits<double>::quiet_NaN());
  // Needs u up to n_max + 1.  d_n is accumulated as n u*_{n+1} + u_{n+1}
  // (identical to (n+1) u_{n+1} - n u_n) so every term stays O(1) and the
  // identity d_n - d_{n-1} = (theta_n - 1)/n survives in double precision.
  double w = 1.0;
  KahanSum u_run;
  u_run.add(b_val - p);
  for (std::int64_t k = 1; k <= n_max + 1; ++k) {
    const std::int64_t n = k - 1;
    w *= (n + prm.a) * (n + prm.b) / ((n + 1.0) * (n + ab_sum));
    const double u_star_k = b_val * w - 1.0 / static_cast<double>(k);
    u_run.add(u_star_k);
    if (k >= 2) {
      const std::int64_t m = k - 1;
      seq.d[m] = m * u_star_k + u_run.value();
    }
    if (k <= n_max)
      seq.theta[k] = k * b_val * w * (k + ab_sum + ab_prod) / (k + ab_sum);
  }
  return seq;
}

// S(p) = p^2 - B (a+b+ab)/(a+b) p + B and its roots.
struct SQuadratic {
  double coeff2;  // 1
  double coeff1;  // -B (a+b+ab)/(a+b)
  double coeff0;  // B
  double p1;      // smaller root (NaN when complex)
  double p2;      // larger root  (NaN when complex)
  double eval(double p) const { return (coeff2 * p + coeff1) * p + coeff0; }
};

inline SQuadratic s_quadratic(const Params& prm) {
  const double b_val = beta(prm.a, prm.b);
  SQuadratic s;
  s.coeff2 = 1.0;
  s.coeff1 = -b_val * (prm.a + prm.b + prm.a * prm.b) / (prm.a + prm.b);
  s.coeff0 = b_val;
  const double disc = s.coeff1 * s.coeff1 - 4.0 * s.coeff0;
  if (disc < 0.0) {
    s.p1 = s.p2 = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  // coeff1 < 0 always, so -coeff1 + sqrt(disc) is free of cancellation.
  const double q = 0.5 * (-s.coeff1 + std::sqrt(disc));
  s.p2 = q;
  s.p1 = s.coeff0 / q;
  return s;
}

// Admissible shift interval [2, R(a,b)] guaranteed non-empty in theorem scope.
struct PInterval {
  double lo;
  double hi;
  bool nonempty;
};

inline PInterval admissible_p(const Params& prm) {
  if (!prm.theorem_scope)
    throw scope_error("admissible_p: requires a,b in (0,1) with a+b <= 1");
  const double r_val = ramanujan_r(prm.a, prm.b);
  return PInterval{2.0, r_val, r_val > 2.0};
}

// Membership in the parameter sets whose intersection drives the induction:
//   E1: alpha_0 >= 0        <=>  p <= B
//   E2: alpha_1 >= 0        <=>  S(p) <= 0
//   E3: (n+1)u_{n+1} >= n u_n for all n >= 1  <=>  p <= R   (proven)
//   E4: p >= (n+1)/n for all n >= 1           <=>  p >= 2
// E3 is decided by the proven characterization; a finite probe of d_n >= 0 up
// to n_probe is carried along as a consistency check, not as the decision.
struct EMembership {
  bool e1;
  bool e2;
  bool e3;
  bool e4;
  bool e3_probe_consistent;
};

inline EMembership e_membership(const Params& prm, double p,
                                std::int64_t n_probe,
                                std::int64_t cap = kDefaultMaxN) {
  if (!(p > 0.0)) throw domain_error("e_membership: p must be positive");
  if (n_probe < 2) throw domain_error("e_membership: n_probe must be >= 2");
  const double b_val = beta(prm.a, prm.b);
  const double r_val = ramanujan_r(prm.a, prm.b);
  EMembership m;
  m.e1 = p <= b_val;
  m.e2 = s_quadratic(prm).eval(p) <= 0.0;
  m.e3 = p <= r_val;
  m.e4 = p >= 2.0;
  m.e3_probe_consistent = true;
  if (m.e3) {
    const DThetaSequences dt = d_theta_sequences(prm, p, n_probe, cap);
    for (std::int64_t n = 1; n <= n_probe; ++n)
      if (dt.d[n] < -1e-12) m.e3_probe_consistent = false;
  }
  return m;
}

// All sequences for a fixed (a, b, p), aligned on index.
struct CoeffTable {
  Params params;
  double p;
  std::int64_t n_max;
  std::vector<double> w;
  std::vector<double> u_star;
  std::vector<double> u;
  std::vector<double> alpha;
  std::vector<double> d;      // index 0 unused (NaN sentinel)
  std::vector<double> theta;  // index 0 unused (NaN sentinel)
};

inline CoeffTable build_coeff_table(const Params& prm, double p,
                                    std::int64_t n_max,
                                    std::int64_t cap = kDefaultMaxN) {
  if (n_max < 2) throw domain_error("build_coeff_table: n_max must be >= 2");
  CoeffTable t;
  t.params = prm;
  t.p = p;
  t.n_max = n_max;
  t.w = w_sequence(prm, n_max, cap);
  USequences us = u_sequences(prm, p, n_max, cap);
  t.u_star = std::move(us.u_star);
  t.u = std::move(us.u);
  t.alpha = alpha_sequence(prm, p, n_max, cap);
  DThetaSequences dt = d_theta_sequences(prm, p, n_max, cap);
  t.d = std::move(dt.d);
  t.theta = std::move(dt.theta);
  return t;
}

}  // namespace ramc
