#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace stancu {

/// A real function of (x1, x2) defined on the whole plane.
using PlaneFunction = std::function<double(double, double)>;

/// A real function of one variable.
using LineFunction = std::function<double(double)>;

/// Which quantity an operator or reference field produces.
enum class Derivative { value, dx1, dx2, dx1dx2 };

[[nodiscard]] std::string_view to_string(Derivative which) noexcept;
[[nodiscard]] std::optional<Derivative> parse_derivative(std::string_view text) noexcept;

/// Where a field's closed form is trusted. Fields on the unit square are
/// extended by zero outside K = [0,1]^2; plane fields are evaluated as-is and
/// exist for analytic test cases only.
enum class Support { unit_square, plane };

enum class SmoothnessClass { smooth, discontinuous_derivative, beyond_hypothesis };

[[nodiscard]] std::string_view to_string(SmoothnessClass cls) noexcept;

[[nodiscard]] constexpr bool in_unit_square(double x1, double x2) noexcept {
  return x1 >= 0.0 && x1 <= 1.0 && x2 >= 0.0 && x2 <= 1.0;
}

/// A bounded real field on K with optional analytic partial derivatives.
///
/// Every evaluation goes through the support policy: for `Support::unit_square`
/// the value and all partials are 0 outside K.
class ScalarField2 {
 public:
  ScalarField2(std::string name, PlaneFunction value,
               SmoothnessClass smoothness = SmoothnessClass::smooth,
               Support support = Support::unit_square);

  /// Attach an analytic partial. `which` must not be Derivative::value.
  ScalarField2& with(Derivative which, PlaneFunction fn);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] SmoothnessClass smoothness() const noexcept { return smoothness_; }
  [[nodiscard]] Support support() const noexcept { return support_; }
  [[nodiscard]] bool has(Derivative which) const noexcept;

  [[nodiscard]] double eval(double x1, double x2) const {
    if (support_ == Support::unit_square && !in_unit_square(x1, x2)) {
      return 0.0;
    }
    return fns_[0](x1, x2);
  }

  /// Evaluates an analytic partial; throws ConfigError if it was not supplied.
  [[nodiscard]] double partial(Derivative which, double x1, double x2) const;

  /// A copy of the (extended) function or partial as a plain callable.
  [[nodiscard]] PlaneFunction function(Derivative which = Derivative::value) const;

 private:
  std::string name_;
  SmoothnessClass smoothness_;
  Support support_;
  std::array<PlaneFunction, 4> fns_;
};

}  // namespace stancu
