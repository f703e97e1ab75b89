#include "stancu/stancu.hpp"

#include <cmath>

#include "stancu/errors.hpp"
#include "stancu/rng.hpp"
#include "stancu/summation.hpp"

namespace stancu {

double stancu_2d(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1, double x2) {
  return evaluate_streaming(cache, f, n, alpha, Derivative::value, x1, x2);
}

double stancu_dx1(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1, double x2) {
  return evaluate_streaming(cache, f, n, alpha, Derivative::dx1, x1, x2);
}

double stancu_dx2(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1, double x2) {
  return evaluate_streaming(cache, f, n, alpha, Derivative::dx2, x1, x2);
}

double stancu_dx1dx2(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1, double x2,
                     MixedOrder order) {
  return evaluate_streaming(cache, f, n, alpha, Derivative::dx1dx2, x1, x2, order);
}

ShiftVector draw_shift(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 rng(substream_seed(seed, index));
  const double a1 = rng.uniform01();
  const double a2 = rng.uniform01();
  return {a1, a2};
}

std::vector<ShiftVector> draw_shifts(std::uint64_t seed, int samples) {
  if (samples < 0) {
    throw ConfigError("sample count must be non-negative");
  }
  std::vector<ShiftVector> out(samples);
  for (int i = 0; i < samples; ++i) {
    out[i] = draw_shift(seed, static_cast<std::uint64_t>(i));
  }
  return out;
}

McEstimate summarize(std::span<const double> values, std::uint64_t seed) {
  if (values.size() < 2) {
    throw ConfigError("a Monte-Carlo estimate needs at least 2 samples");
  }
  const double count = static_cast<double>(values.size());
  CompensatedSum sum;
  for (double v : values) {
    sum.add(v);
  }
  const double mean = sum.value() / count;
  CompensatedSum squares;
  for (double v : values) {
    squares.add((v - mean) * (v - mean));
  }
  const double variance = squares.value() / (count - 1.0);
  return {mean, std::sqrt(variance / count), static_cast<int>(values.size()), seed};
}

McEstimate estimate_expectation(std::span<const ShiftVector> shifts, std::uint64_t seed,
                                const std::function<double(const ShiftVector&)>& per_sample,
                                ParallelOptions options) {
  if (shifts.size() < 2) {
    throw ConfigError("a Monte-Carlo estimate needs at least 2 samples");
  }
  std::vector<double> values(shifts.size());
  parallel_for(shifts.size(), options, [&](std::size_t i) { values[i] = per_sample(shifts[i]); });
  return summarize(values, seed);
}

StancuL1Kernel::StancuL1Kernel(const BasisCache& cache, const ScalarField2& f, const PlaneFunction& reference,
                               Derivative which, int n, const GridSpec& grid, MixedOrder order)
    : field_(f), which_(which), order_(order), n_(n), evaluator_(cache, grid, n) {
  const int m = grid.m();
  reference_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      reference_[static_cast<std::size_t>(i) * m + j] = reference(grid.node(i), grid.node(j));
    }
  }
}

std::vector<double> StancuL1Kernel::operator_values(const ShiftVector& alpha) const {
  const NodeSamples samples(field_, n_, alpha);
  const BernsteinForm2 form(samples, which_, order_);
  return evaluator_.evaluate(form);
}

double StancuL1Kernel::operator()(const ShiftVector& alpha) const {
  auto values = operator_values(alpha);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] -= reference_[i];
  }
  return l1_norm_values(values, evaluator_.grid());
}

McEstimate expected_l1_error(const BasisCache& cache, const ScalarField2& f, const PlaneFunction& reference,
                             Derivative which, int n, const GridSpec& grid, std::span<const ShiftVector> shifts,
                             std::uint64_t seed, ParallelOptions options) {
  if (shifts.size() < 2) {
    throw ConfigError("expected_l1_error needs at least 2 samples");
  }
  const StancuL1Kernel kernel(cache, f, reference, which, n, grid);
  return estimate_expectation(shifts, seed, [&](const ShiftVector& alpha) { return kernel(alpha); }, options);
}

McEstimate expected_l1_error(const BasisCache& cache, const ScalarField2& f, const PlaneFunction& reference,
                             Derivative which, int n, const GridSpec& grid, int samples, std::uint64_t seed,
                             ParallelOptions options) {
  if (samples < 2) {
    throw ConfigError("expected_l1_error needs at least 2 samples, got " + std::to_string(samples));
  }
  const auto shifts = draw_shifts(seed, samples);
  return expected_l1_error(cache, f, reference, which, n, grid, shifts, seed, options);
}

}  // namespace stancu
