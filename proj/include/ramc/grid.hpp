#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ramc/errors.hpp"

// Rectangular sampling grids over named axes, with an optional named
// constraint predicate filtering the cartesian product.

namespace ramc::verify {

enum class Spacing { linear, log };

struct GridAxis {
  std::string name;
  double lo;
  double hi;
  int count;
  Spacing spacing;
};

struct GridSpec {
  std::vector<GridAxis> dims;
  std::string constraint;  // "", "a+b<=1", "x<c"
};

using GridPoint = std::map<std::string, double>;

inline GridAxis make_axis(const std::string& name, double lo, double hi,
                          int count, Spacing spacing = Spacing::linear) {
  if (count < 2) throw domain_error("grid axis needs count >= 2");
  if (!(lo < hi)) throw domain_error("grid axis needs lo < hi");
  if (spacing == Spacing::log && !(lo > 0.0))
    throw domain_error("log-spaced axis needs lo > 0");
  return GridAxis{name, lo, hi, count, spacing};
}

inline std::vector<double> axis_points(const GridAxis& ax) {
  std::vector<double> pts(static_cast<std::size_t>(ax.count));
  if (ax.spacing == Spacing::linear) {
    const double step = (ax.hi - ax.lo) / (ax.count - 1);
    for (int i = 0; i < ax.count; ++i) pts[i] = ax.lo + step * i;
  } else {
    const double llo = std::log(ax.lo), lhi = std::log(ax.hi);
    const double step = (lhi - llo) / (ax.count - 1);
    for (int i = 0; i < ax.count; ++i) pts[i] = std::exp(llo + step * i);
  }
  pts.front() = ax.lo;
  pts.back() = ax.hi;
  return pts;
}

inline bool constraint_holds(const std::string& name, const GridPoint& pt) {
  if (name.empty()) return true;
  if (name == "a+b<=1") return pt.at("a") + pt.at("b") <= 1.0;
  if (name == "x<c") return pt.at("x") < pt.at("c");
  throw domain_error("unknown grid constraint: " + name);
}

// Cartesian product in row-major order over dims, filtered by the constraint.
inline std::vector<GridPoint> grid_points(const GridSpec& spec) {
  std::vector<GridPoint> out;
  if (spec.dims.empty()) return out;
  std::vector<std::vector<double>> per_axis;
  per_axis.reserve(spec.dims.size());
  for (const GridAxis& ax : spec.dims) per_axis.push_back(axis_points(ax));
  std::vector<std::size_t> idx(spec.dims.size(), 0);
  while (true) {
    GridPoint pt;
    for (std::size_t d = 0; d < spec.dims.size(); ++d)
      pt[spec.dims[d].name] = per_axis[d][idx[d]];
    if (constraint_holds(spec.constraint, pt)) out.push_back(std::move(pt));
    std::size_t d = spec.dims.size();
    while (d > 0) {
      --d;
      if (++idx[d] < per_axis[d].size()) break;
      idx[d] = 0;
      if (d == 0) return out;
    }
  }
}

}  // namespace ramc::verify
