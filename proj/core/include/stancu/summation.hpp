#pragma once

#include <cmath>
#include <span>

namespace stancu {

/// Neumaier's variant of Kahan summation. The result depends only on the
/// order of `add` calls, so a fixed loop order gives bit-identical sums.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;

  constexpr void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      compensation_ += (sum_ - t) + v;
    } else {
      compensation_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }

  [[nodiscard]] constexpr double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Compensated dot product, accumulated in index order.
[[nodiscard]] inline double compensated_dot(std::span<const double> a, std::span<const double> b) noexcept {
  CompensatedSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc.add(a[i] * b[i]);
  }
  return acc.value();
}

}  // namespace stancu
