#pragma once

#include <cmath>

namespace lcf {

/// Neumaier's variant of Kahan summation. The result depends on the order
/// of the added terms only through the final rounding.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      correction_ += (sum_ - t) + x;
    else
      correction_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0;
  double correction_ = 0;
};

}  // namespace lcf
