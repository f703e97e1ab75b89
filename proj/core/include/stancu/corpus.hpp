#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stancu/field.hpp"

namespace stancu {

enum class ClassTag {
  c2_smooth,
  discontinuous_mixed_derivative,
  discontinuous_first_derivative,
  beyond_hypothesis,
};

[[nodiscard]] std::string_view to_string(ClassTag tag) noexcept;

/// g(t) = (t - 1/2)^2 sin(1/(t - 1/2)), g(1/2) = 0. Differentiable everywhere
/// with |g'| <= 2; g' is discontinuous at 1/2.
[[nodiscard]] double oscillating_factor(double t) noexcept;
/// g'(t) = 2u sin(1/u) - cos(1/u) with u = t - 1/2, and g'(1/2) = 0.
[[nodiscard]] double oscillating_factor_derivative(double t) noexcept;

struct CorpusEntry {
  ScalarField2 field;
  std::vector<ClassTag> tags;
  std::string notes;
  /// Lines x1 = c (resp. x2 = c) where some supplied partial is discontinuous.
  std::vector<double> singular_x1;
  std::vector<double> singular_x2;
  /// sup_K |f|.
  double sup_bound = 0.0;

  [[nodiscard]] const std::string& name() const noexcept { return field.name(); }
  [[nodiscard]] bool has_tag(ClassTag tag) const noexcept;
  /// True when the entry is inside the hypothesis class for measuring `which`:
  /// it supplies that partial and is not tagged beyond-hypothesis.
  [[nodiscard]] bool satisfies(Derivative which) const noexcept;
  /// Distance from (x1, x2) to the nearest singular line (infinity if none).
  [[nodiscard]] double distance_to_singular(double x1, double x2) const noexcept;
};

/// poly, trig, osc, ridge, kink, in that order. Built once; immutable.
[[nodiscard]] const std::vector<CorpusEntry>& corpus();

/// Throws ConfigError for an unknown name.
[[nodiscard]] const CorpusEntry& corpus_entry(std::string_view name);

}  // namespace stancu
