#include "stancu/field.hpp"

#include <utility>

#include "stancu/errors.hpp"

namespace stancu {

namespace {

constexpr std::size_t slot(Derivative which) noexcept { return static_cast<std::size_t>(which); }

}  // namespace

std::string_view to_string(Derivative which) noexcept {
  switch (which) {
    case Derivative::value:
      return "value";
    case Derivative::dx1:
      return "dx1";
    case Derivative::dx2:
      return "dx2";
    case Derivative::dx1dx2:
      return "dx1dx2";
  }
  return "?";
}

std::optional<Derivative> parse_derivative(std::string_view text) noexcept {
  for (auto which : {Derivative::value, Derivative::dx1, Derivative::dx2, Derivative::dx1dx2}) {
    if (text == to_string(which)) {
      return which;
    }
  }
  return std::nullopt;
}

std::string_view to_string(SmoothnessClass cls) noexcept {
  switch (cls) {
    case SmoothnessClass::smooth:
      return "smooth";
    case SmoothnessClass::discontinuous_derivative:
      return "discontinuous-derivative";
    case SmoothnessClass::beyond_hypothesis:
      return "beyond-hypothesis";
  }
  return "?";
}

ScalarField2::ScalarField2(std::string name, PlaneFunction value, SmoothnessClass smoothness,
                           Support support)
    : name_(std::move(name)), smoothness_(smoothness), support_(support) {
  if (!value) {
    throw ConfigError("field '" + name_ + "' has no value function");
  }
  fns_[0] = std::move(value);
}

ScalarField2& ScalarField2::with(Derivative which, PlaneFunction fn) {
  if (which == Derivative::value) {
    throw ConfigError("field '" + name_ + "': the value function is set at construction");
  }
  fns_[slot(which)] = std::move(fn);
  return *this;
}

bool ScalarField2::has(Derivative which) const noexcept { return static_cast<bool>(fns_[slot(which)]); }

double ScalarField2::partial(Derivative which, double x1, double x2) const {
  const auto& fn = fns_[slot(which)];
  if (!fn) {
    throw ConfigError("field '" + name_ + "' has no analytic " + std::string(to_string(which)));
  }
  if (support_ == Support::unit_square && !in_unit_square(x1, x2)) {
    return 0.0;
  }
  return fn(x1, x2);
}

PlaneFunction ScalarField2::function(Derivative which) const {
  if (!has(which)) {
    throw ConfigError("field '" + name_ + "' has no analytic " + std::string(to_string(which)));
  }
  return [fn = fns_[slot(which)], zero_outside = support_ == Support::unit_square](double x1, double x2) {
    if (zero_outside && !in_unit_square(x1, x2)) {
      return 0.0;
    }
    return fn(x1, x2);
  };
}

}  // namespace stancu
