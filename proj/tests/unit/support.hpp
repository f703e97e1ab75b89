#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "stancu/field.hpp"
#include "stancu/rng.hpp"

namespace stancu::testing {

inline ScalarField2 plane_field(std::string name, PlaneFunction fn) {
  return ScalarField2(std::move(name), std::move(fn), SmoothnessClass::smooth, Support::plane);
}

inline ScalarField2 square_field(std::string name, PlaneFunction fn) {
  return ScalarField2(std::move(name), std::move(fn));
}

/// Central difference of a plane function in x1 or x2.
inline double central_x1(const std::function<double(double, double)>& f, double x1, double x2, double h) {
  return (f(x1 + h, x2) - f(x1 - h, x2)) / (2.0 * h);
}
inline double central_x2(const std::function<double(double, double)>& f, double x1, double x2, double h) {
  return (f(x1, x2 + h) - f(x1, x2 - h)) / (2.0 * h);
}
inline double central_mixed(const std::function<double(double, double)>& f, double x1, double x2, double h) {
  return (f(x1 + h, x2 + h) - f(x1 + h, x2 - h) - f(x1 - h, x2 + h) + f(x1 - h, x2 - h)) / (4.0 * h * h);
}

/// Deterministic uniform draws for property tests.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo = 0.0, double hi = 1.0) { return lo + (hi - lo) * rng_.uniform01(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  SplitMix64 rng_;
};

}  // namespace stancu::testing
