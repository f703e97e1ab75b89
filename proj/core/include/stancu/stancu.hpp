#pragma once

// Randomized Bernstein–Stancu operator on K = [0,1]^2:
//
//   B~_{α,n}(f; x1, x2) = Σ_{k1,k2=0..n} f((k1+α1)/n, (k2+α2)/n) b_{n,k1}(x1) b_{n,k2}(x2),
//
// with α uniform on [0,1]^2 and f extended by zero outside K, plus its
// difference-form partial derivatives and the Monte-Carlo estimate of
// E ∫∫_K |∂B~ - ∂f|.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stancu/bernstein.hpp"
#include "stancu/field.hpp"
#include "stancu/parallel.hpp"
#include "stancu/quadrature.hpp"
#include "stancu/tensor_kernel.hpp"

namespace stancu {

/// Mean of a Monte-Carlo estimate with its standard error
/// (sample standard deviation / sqrt(samples)).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

[[nodiscard]] double stancu_2d(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1,
                               double x2);

/// n Σ_{k1<n, k2<=n} [f((k1+1+α1)/n, (k2+α2)/n) - f((k1+α1)/n, (k2+α2)/n)] b_{n-1,k1}(x1) b_{n,k2}(x2)
[[nodiscard]] double stancu_dx1(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1,
                                double x2);

[[nodiscard]] double stancu_dx2(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha, double x1,
                                double x2);

/// n^2 Σ_{k1,k2<n} [Δ(x1)Δ(x2) f]((k1+α1)/n, (k2+α2)/n) Π_{k1,k2}(x1, x2)
[[nodiscard]] double stancu_dx1dx2(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector alpha,
                                   double x1, double x2, MixedOrder order = MixedOrder::delta1_of_delta2);

/// The i-th shift under `seed`, drawn from substream (seed, i).
[[nodiscard]] ShiftVector draw_shift(std::uint64_t seed, std::uint64_t index) noexcept;
[[nodiscard]] std::vector<ShiftVector> draw_shifts(std::uint64_t seed, int samples);

/// Mean and standard error of `values`, reduced in index order.
/// Throws ConfigError for fewer than two values.
[[nodiscard]] McEstimate summarize(std::span<const double> values, std::uint64_t seed);

/// Evaluates `per_sample` on every shift (possibly in parallel) and reduces
/// the results in shift order, so the estimate does not depend on threads.
[[nodiscard]] McEstimate estimate_expectation(std::span<const ShiftVector> shifts, std::uint64_t seed,
                                              const std::function<double(const ShiftVector&)>& per_sample,
                                              ParallelOptions options = {});

/// Grid L1 distance between one derivative of the Stancu operator and a
/// reference field, for a fixed degree and grid. The reference is tabulated
/// once; each call costs one coefficient matrix and one grid contraction.
class StancuL1Kernel {
 public:
  StancuL1Kernel(const BasisCache& cache, const ScalarField2& f, const PlaneFunction& reference, Derivative which,
                 int n, const GridSpec& grid, MixedOrder order = MixedOrder::delta1_of_delta2);

  /// ∑_nodes |∂B~_{α,n} f - reference| / m^2. Thread-safe.
  [[nodiscard]] double operator()(const ShiftVector& alpha) const;

  /// Operator values on the grid (row-major, x1 outer).
  [[nodiscard]] std::vector<double> operator_values(const ShiftVector& alpha) const;

  [[nodiscard]] const std::vector<double>& reference_values() const noexcept { return reference_; }

 private:
  const ScalarField2& field_;
  Derivative which_;
  MixedOrder order_;
  int n_;
  GridEvaluator evaluator_;
  std::vector<double> reference_;
};

/// Monte-Carlo estimate of E ∫∫_K |∂B~_{α,n} f - reference| with `samples`
/// shifts drawn from substreams of `seed`.
[[nodiscard]] McEstimate expected_l1_error(const BasisCache& cache, const ScalarField2& f,
                                           const PlaneFunction& reference, Derivative which, int n,
                                           const GridSpec& grid, int samples, std::uint64_t seed,
                                           ParallelOptions options = {});

/// Same estimate over an explicit list of shifts; `seed` is only recorded.
[[nodiscard]] McEstimate expected_l1_error(const BasisCache& cache, const ScalarField2& f,
                                           const PlaneFunction& reference, Derivative which, int n,
                                           const GridSpec& grid, std::span<const ShiftVector> shifts,
                                           std::uint64_t seed, ParallelOptions options = {});

}  // namespace stancu
