#pragma once

#include <cmath>

namespace taildep::detail {

/// Neumaier compensated accumulator. Summing in a fixed order makes reduced
/// statistics independent of how the work producing the terms was threaded.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace taildep::detail
