#pragma once

#include <cmath>

namespace gammacheck {

/*
  Neumaier variant of Kahan summation. Unlike plain Kahan it stays accurate
  when an incoming term is larger in magnitude than the running sum, which
  happens routinely in the alternating blocks.
*/
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) noexcept {
    const double t = sum + value;
    if (std::fabs(sum) >= std::fabs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  double value() const noexcept { return sum + compensation; }
};

}  // namespace gammacheck
