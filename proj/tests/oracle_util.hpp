#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ramc/constants.hpp"
#include "ramc/summation.hpp"

// Test-only reference computations, independent of the library's evaluation
// paths: direct (slow) summation of the psi/polygamma series, and
// series/limit definitions of the constants.

namespace testutil {

struct SlowValue {
  double value;
  double tail_bound;  // truncation error bound of the summation
};

inline constexpr std::int64_t kSlowCap = 10'000'000;

// psi(x) = -gamma - 1/x + sum_{k>=1} x/(k(k+x)); tail < x/N.
inline SlowValue psi_series(double x, std::int64_t cap = kSlowCap) {
  ramc::KahanSum sum;
  sum.add(-ramc::kEulerGamma);
  sum.add(-1.0 / x);
  std::int64_t k = 1;
  for (; k <= cap; ++k) {
    const double term = x / (k * (k + x));
    sum.add(term);
    if (term < 1e-18 * std::abs(sum.value())) break;
  }
  return {sum.value(), x / static_cast<double>(k)};
}

// psi^(m)(x) = (-1)^{m+1} m! sum_{k>=0} (x+k)^{-(m+1)};
// tail < m! / (m (x+N)^m) after N terms.
inline SlowValue polygamma_series(int m, double x, std::int64_t cap = kSlowCap) {
  ramc::KahanSum sum;
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;
  std::int64_t k = 0;
  for (; k <= cap; ++k) {
    const double term = std::pow(x + k, -(m + 1.0));
    sum.add(term);
    if (term < 1e-18 * sum.value()) break;
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const double tail = fact / m * std::pow(x + static_cast<double>(k), -m);
  return {sign * fact * sum.value(), fact * tail};
}

// gamma = lim (H_N - ln N), accelerated by the Euler-Maclaurin tail.
inline double euler_gamma_limit(std::int64_t n = 10'000) {
  ramc::KahanSum h;
  for (std::int64_t k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
  const double nd = static_cast<double>(n);
  return h.value() - std::log(nd) - 0.5 / nd + 1.0 / (12.0 * nd * nd) -
         1.0 / (120.0 * nd * nd * nd * nd);
}

// zeta(3) = sum k^-3 with Euler-Maclaurin tail at N.
inline double zeta3_series(std::int64_t n = 10'000) {
  ramc::KahanSum s;
  for (std::int64_t k = 1; k <= n; ++k)
    s.add(std::pow(static_cast<double>(k), -3.0));
  const double m = static_cast<double>(n) + 1.0;
  return s.value() + 1.0 / (2.0 * m * m) + 1.0 / (2.0 * m * m * m) +
         1.0 / (4.0 * m * m * m * m) - 1.0 / (12.0 * std::pow(m, 6.0));
}

// pi^2/6 = sum k^-2 with Euler-Maclaurin tail at N.
inline double basel_series(std::int64_t n = 10'000) {
  ramc::KahanSum s;
  for (std::int64_t k = 1; k <= n; ++k)
    s.add(1.0 / (static_cast<double>(k) * static_cast<double>(k)));
  const double m = static_cast<double>(n) + 1.0;
  return s.value() + 1.0 / m + 1.0 / (2.0 * m * m) + 1.0 / (6.0 * m * m * m) -
         1.0 / (30.0 * std::pow(m, 5.0));
}

// Machin's formula.
inline double pi_machin() {
  return 16.0 * std::atan(0.2) - 4.0 * std::atan(1.0 / 239.0);
}

// ln 2 = sum_{k>=1} 1/(k 2^k).
inline double ln2_series() {
  ramc::KahanSum s;
  double pow2 = 1.0;
  for (int k = 1; k <= 64; ++k) {
    pow2 *= 0.5;
    s.add(pow2 / k);
  }
  return s.value();
}

// Deterministic uniform sampler (fixed layout, independent of libstdc++
// distribution internals).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = std::ldexp(static_cast<double>(eng_() >> 11), -53);
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testutil
