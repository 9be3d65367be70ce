#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "ramc/errors.hpp"

// Globally adaptive quadrature on a finite interval built on the 15-point
// Kronrod / 7-point Gauss pair.  The interval with the largest error estimate
// is bisected until the summed estimate meets the tolerance.

namespace ramc::oracles {

struct QuadResult {
  double value;
  double est_error;   // absolute
  std::int64_t evaluations;
};

namespace detail {

// Nodes and weights of the (G7, K15) pair, QUADPACK DQK15.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double lo, hi, value, err;
  bool operator<(const Interval& other) const { return err < other.err; }
};

template <class F>
Interval gk15(const F& f, double lo, double hi, std::int64_t& evals) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_mid = f(mid);
  double kronrod = kWgk[7] * f_mid;
  double gauss = kWg[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double sum2 = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[i] * sum2;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum2;
  }
  evals += 15;
  kronrod *= half;
  gauss *= half;
  return Interval{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

template <class F>
QuadResult integrate_adaptive(const F& f, double lo, double hi, double tol_abs,
                              int max_intervals = 4000) {
  if (!(lo < hi)) throw domain_error("integrate_adaptive: requires lo < hi");
  if (!(tol_abs > 0.0)) throw domain_error("integrate_adaptive: tol must be positive");
  std::int64_t evals = 0;
  std::priority_queue<detail::Interval> active;
  std::vector<detail::Interval> frozen;  // intervals at machine resolution
  active.push(detail::gk15(f, lo, hi, evals));
  double active_err = active.top().err;
  int n_intervals = 1;
  while (active_err > tol_abs && n_intervals < max_intervals && !active.empty()) {
    const detail::Interval worst = active.top();
    active.pop();
    active_err -= worst.err;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      frozen.push_back(worst);
      continue;
    }
    const detail::Interval left = detail::gk15(f, worst.lo, mid, evals);
    const detail::Interval right = detail::gk15(f, mid, worst.hi, evals);
    active_err += left.err + right.err;
    active.push(left);
    active.push(right);
    ++n_intervals;
  }
  // Sum the final partition.
  double value = 0.0, comp = 0.0, err = 0.0;
  auto absorb = [&](const detail::Interval& iv) {
    const double y = iv.value - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
    err += iv.err;
  };
  for (const detail::Interval& iv : frozen) absorb(iv);
  while (!active.empty()) {
    absorb(active.top());
    active.pop();
  }
  if (err > tol_abs)
    throw numeric_error("integrate_adaptive: tolerance not met after max subdivisions");
  return QuadResult{value, err, evals};
}

}  // namespace ramc::oracles
