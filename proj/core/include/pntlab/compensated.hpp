#pragma once

#include <cmath>

namespace pntlab {

/// Neumaier's variant of Kahan summation.
///
/// The running compensation also captures the error when the incoming term is
/// larger in magnitude than the partial sum, which happens constantly in the
/// oscillatory zero sums. Two partials can be merged with `operator+=` so that
/// chunked reductions stay reproducible as long as chunks are merged in a
/// fixed order.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator+=(const CompensatedSum& other) {
    *this += other.sum_;
    compensation_ += other.compensation_;
    return *this;
  }

  double value() const { return sum_ + compensation_; }
  double raw_sum() const { return sum_; }
  double compensation() const { return compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace pntlab
