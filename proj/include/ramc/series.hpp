#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ramc/errors.hpp"
#include "ramc/summation.hpp"

// Small dense power-series toolkit (coefficients of Maclaurin expansions).
// Used by the exploratory coefficient tabulations.

namespace ramc::series {

// Coefficients of (1-x)^{-1/2}: s_0 = 1, s_{n+1} = s_n (n+1/2)/(n+1).
inline std::vector<double> inv_sqrt_one_minus(std::size_t n_max) {
  std::vector<double> s(n_max + 1);
  s[0] = 1.0;
  for (std::size_t n = 0; n < n_max; ++n)
    s[n + 1] = s[n] * (n + 0.5) / (n + 1.0);
  return s;
}

// Coefficients of ln(h(x)) given h with h_0 > 0, via h' = (ln h)' h:
//   (n+1) h_{n+1} = sum_{j=0}^{n} (j+1) l_{j+1} h_{n-j}.
inline std::vector<double> log_of(const std::vector<double>& h) {
  if (h.empty() || !(h[0] > 0.0))
    throw domain_error("series::log_of: requires h_0 > 0");
  std::vector<double> l(h.size());
  l[0] = std::log(h[0]);
  for (std::size_t n = 0; n + 1 < h.size(); ++n) {
    KahanSum acc;
    acc.add((n + 1.0) * h[n + 1]);
    for (std::size_t j = 0; j < n; ++j)
      acc.add(-(j + 1.0) * l[j + 1] * h[n - j]);
    l[n + 1] = acc.value() / ((n + 1.0) * h[0]);
  }
  return l;
}

// Coefficients of a(x)/b(x) with b_0 != 0 (Cauchy division).
inline std::vector<double> divide(const std::vector<double>& a,
                                  const std::vector<double>& b) {
  if (b.empty() || b[0] == 0.0)
    throw domain_error("series::divide: requires b_0 != 0");
  std::vector<double> q(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    KahanSum acc;
    acc.add(a[n]);
    for (std::size_t k = 1; k <= n && k < b.size(); ++k)
      acc.add(-b[k] * q[n - k]);
    q[n] = acc.value() / b[0];
  }
  return q;
}

// Coefficients of a(x)/(1-x): prefix sums.
inline std::vector<double> divide_one_minus(const std::vector<double>& a) {
  std::vector<double> out(a.size());
  KahanSum acc;
  for (std::size_t n = 0; n < a.size(); ++n) {
    acc.add(a[n]);
    out[n] = acc.value();
  }
  return out;
}

}  // namespace ramc::series
