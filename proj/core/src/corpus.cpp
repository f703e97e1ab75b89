#include "stancu/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stancu/errors.hpp"

namespace stancu {

std::string_view to_string(ClassTag tag) noexcept {
  switch (tag) {
    case ClassTag::c2_smooth:
      return "C2-smooth";
    case ClassTag::discontinuous_mixed_derivative:
      return "discontinuous-mixed-derivative";
    case ClassTag::discontinuous_first_derivative:
      return "discontinuous-first-derivative";
    case ClassTag::beyond_hypothesis:
      return "beyond-hypothesis";
  }
  return "unknown";
}

double oscillating_factor(double t) noexcept {
  const double u = t - 0.5;
  if (u == 0.0) {
    return 0.0;
  }
  return u * u * std::sin(1.0 / u);
}

double oscillating_factor_derivative(double t) noexcept {
  const double u = t - 0.5;
  if (u == 0.0) {
    return 0.0;
  }
  return 2.0 * u * std::sin(1.0 / u) - std::cos(1.0 / u);
}

bool CorpusEntry::has_tag(ClassTag tag) const noexcept { return std::ranges::find(tags, tag) != tags.end(); }

bool CorpusEntry::satisfies(Derivative which) const noexcept {
  if (has_tag(ClassTag::beyond_hypothesis)) {
    return false;
  }
  return which == Derivative::value || field.has(which);
}

double CorpusEntry::distance_to_singular(double x1, double x2) const noexcept {
  double d = std::numeric_limits<double>::infinity();
  for (double c : singular_x1) {
    d = std::min(d, std::abs(x1 - c));
  }
  for (double c : singular_x2) {
    d = std::min(d, std::abs(x2 - c));
  }
  return d;
}

namespace {

double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

std::vector<CorpusEntry> build_corpus() {
  constexpr double pi = std::numbers::pi;
  std::vector<CorpusEntry> entries;

  {
    ScalarField2 f("poly", [](double x1, double x2) { return x1 * x1 * x2 + x2; });
    f.with(Derivative::dx1, [](double x1, double x2) { return 2.0 * x1 * x2; })
        .with(Derivative::dx2, [](double x1, double) { return x1 * x1 + 1.0; })
        .with(Derivative::dx1dx2, [](double x1, double) { return 2.0 * x1; });
    entries.push_back({std::move(f), {ClassTag::c2_smooth}, "x1^2 x2 + x2", {}, {}, 2.0});
  }
  {
    ScalarField2 f("trig", [](double x1, double x2) { return std::sin(pi * x1) * std::cos(pi * x2); });
    f.with(Derivative::dx1, [](double x1, double x2) { return pi * std::cos(pi * x1) * std::cos(pi * x2); })
        .with(Derivative::dx2, [](double x1, double x2) { return -pi * std::sin(pi * x1) * std::sin(pi * x2); })
        .with(Derivative::dx1dx2,
              [](double x1, double x2) { return -pi * pi * std::cos(pi * x1) * std::sin(pi * x2); });
    entries.push_back({std::move(f), {ClassTag::c2_smooth}, "sin(pi x1) cos(pi x2)", {}, {}, 1.0});
  }
  {
    ScalarField2 f(
        "osc", [](double x1, double x2) { return oscillating_factor(x1) * oscillating_factor(x2); },
        SmoothnessClass::discontinuous_derivative);
    f.with(Derivative::dx1,
           [](double x1, double x2) { return oscillating_factor_derivative(x1) * oscillating_factor(x2); })
        .with(Derivative::dx2,
              [](double x1, double x2) { return oscillating_factor(x1) * oscillating_factor_derivative(x2); })
        .with(Derivative::dx1dx2, [](double x1, double x2) {
          return oscillating_factor_derivative(x1) * oscillating_factor_derivative(x2);
        });
    entries.push_back({std::move(f),
                       {ClassTag::discontinuous_mixed_derivative},
                       "g(x1) g(x2), g(t) = (t-1/2)^2 sin(1/(t-1/2)); f_x1x2 = g'(x1) g'(x2) exists everywhere, "
                       "bounded, discontinuous on t = 1/2",
                       {0.5},
                       {0.5},
                       1.0 / 16.0});
  }
  {
    ScalarField2 f(
        "ridge", [](double x1, double x2) { return oscillating_factor(x1) * x2; },
        SmoothnessClass::discontinuous_derivative);
    f.with(Derivative::dx1, [](double x1, double x2) { return oscillating_factor_derivative(x1) * x2; })
        .with(Derivative::dx2, [](double x1, double) { return oscillating_factor(x1); })
        .with(Derivative::dx1dx2, [](double x1, double) { return oscillating_factor_derivative(x1); });
    entries.push_back({std::move(f),
                       {ClassTag::discontinuous_first_derivative},
                       "g(x1) x2; f_x1 exists everywhere and is discontinuous on x1 = 1/2",
                       {0.5},
                       {},
                       0.25});
  }
  {
    ScalarField2 f(
        "kink", [](double x1, double x2) { return std::abs(x1 - 0.5) * std::abs(x2 - 0.5); },
        SmoothnessClass::beyond_hypothesis);
    f.with(Derivative::dx1, [](double x1, double x2) { return sign(x1 - 0.5) * std::abs(x2 - 0.5); })
        .with(Derivative::dx2, [](double x1, double x2) { return std::abs(x1 - 0.5) * sign(x2 - 0.5); })
        .with(Derivative::dx1dx2, [](double x1, double x2) { return sign(x1 - 0.5) * sign(x2 - 0.5); });
    entries.push_back({std::move(f),
                       {ClassTag::beyond_hypothesis},
                       "|x1-1/2| |x2-1/2|; partials hold off the lines x = 1/2 only (sign(0) taken as 0)",
                       {0.5},
                       {0.5},
                       0.25});
  }
  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& entry : corpus()) {
    if (entry.name() == name) {
      return entry;
    }
  }
  throw ConfigError("unknown corpus function '" + std::string(name) + "' (expected poly|trig|osc|ridge|kink)");
}

}  // namespace stancu
