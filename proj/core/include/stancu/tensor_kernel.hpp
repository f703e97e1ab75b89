#pragma once

// Difference-form coefficients of the (shifted) tensor Bernstein operator and
// their contraction with basis vectors. Both the pointwise evaluators and the
// grid evaluator use the same coefficient expressions and the same
// contraction order (inner over k2, then k1), so their results agree bit for bit.

#include <span>
#include <vector>

#include "stancu/bernstein.hpp"
#include "stancu/field.hpp"
#include "stancu/quadrature.hpp"

namespace stancu {

/// Node shift α = (α1, α2) ∈ [0,1]^2. Sample nodes are ((k1+α1)/n, (k2+α2)/n).
struct ShiftVector {
  double a1 = 0.0;
  double a2 = 0.0;

  /// Throws DomainError unless both components lie in [0, 1].
  void validate() const;
};

/// f sampled on the shifted lattice, 0 <= k1, k2 <= n, through f.eval
/// (so nodes beyond 1 read the zero extension).
class NodeSamples {
 public:
  NodeSamples(const ScalarField2& f, int n, ShiftVector shift);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] double operator()(int k1, int k2) const noexcept { return values_[k1 * (n_ + 1) + k2]; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Degree of the basis in each variable for a given derivative of a degree-n operator.
[[nodiscard]] constexpr int form_degree1(Derivative which, int n) noexcept {
  return (which == Derivative::dx1 || which == Derivative::dx1dx2) ? n - 1 : n;
}
[[nodiscard]] constexpr int form_degree2(Derivative which, int n) noexcept {
  return (which == Derivative::dx2 || which == Derivative::dx1dx2) ? n - 1 : n;
}

/// Coefficient (k1, k2) of the requested derivative before the n or n^2 scale.
template <typename Samples>
[[nodiscard]] inline double difference_coefficient(const Samples& f, Derivative which, MixedOrder order, int k1,
                                                   int k2) noexcept {
  switch (which) {
    case Derivative::value:
      return f(k1, k2);
    case Derivative::dx1:
      return f(k1 + 1, k2) - f(k1, k2);
    case Derivative::dx2:
      return f(k1, k2 + 1) - f(k1, k2);
    case Derivative::dx1dx2:
      if (order == MixedOrder::delta1_of_delta2) {
        return (f(k1 + 1, k2 + 1) - f(k1 + 1, k2)) - (f(k1, k2 + 1) - f(k1, k2));
      }
      return (f(k1 + 1, k2 + 1) - f(k1, k2 + 1)) - (f(k1 + 1, k2) - f(k1, k2));
  }
  return 0.0;
}

/// n, n, or n^2 depending on the derivative order.
[[nodiscard]] double derivative_scale(Derivative which, int n) noexcept;

/// A derivative of the operator written as a tensor Bernstein polynomial:
///   scale * sum_{k1,k2} c[k1][k2] b_{d1,k1}(x1) b_{d2,k2}(x2).
class BernsteinForm2 {
 public:
  BernsteinForm2(const NodeSamples& samples, Derivative which, MixedOrder order = MixedOrder::delta1_of_delta2);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int degree1() const noexcept { return degree1_; }
  [[nodiscard]] int degree2() const noexcept { return degree2_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  [[nodiscard]] std::span<const double> row(int k1) const noexcept {
    return {coefficients_.data() + static_cast<std::size_t>(k1) * (degree2_ + 1),
            static_cast<std::size_t>(degree2_ + 1)};
  }

 private:
  int n_;
  int degree1_;
  int degree2_;
  double scale_;
  std::vector<double> coefficients_;
};

/// Evaluate a form at one point.
[[nodiscard]] double evaluate_form(const BasisCache& cache, const BernsteinForm2& form, double x1, double x2);

/// Evaluate the requested derivative of the shifted operator at one point,
/// sampling f on the fly with O(n) working storage.
[[nodiscard]] double evaluate_streaming(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector shift,
                                        Derivative which, double x1, double x2,
                                        MixedOrder order = MixedOrder::delta1_of_delta2);

/// Evaluates forms of one degree n on every node of a midpoint grid.
///
/// Basis tables for degrees n and n-1 are built once; each form then costs
/// O(n^2 m + n m^2) through the factorization V = B1 (C B2^T).
class GridEvaluator {
 public:
  GridEvaluator(const BasisCache& cache, const GridSpec& grid, int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }

  /// Values at node (i, j) stored at out[i * m + j]; out must hold m*m values.
  void evaluate(const BernsteinForm2& form, std::span<double> out) const;
  [[nodiscard]] std::vector<double> evaluate(const BernsteinForm2& form) const;

 private:
  [[nodiscard]] const std::vector<double>& table(int degree) const;

  int n_;
  GridSpec grid_;
  std::vector<double> basis_n_;        // m x (n+1)
  std::vector<double> basis_n_minus_;  // m x n
};

}  // namespace stancu
