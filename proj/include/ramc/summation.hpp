#pragma once

namespace ramc {

// Kahan compensated accumulator. Keeps long sums accurate to a few ulps
// independent of length.
class KahanSum {
 public:
  void add(double term) {
    const double y = term - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace ramc
