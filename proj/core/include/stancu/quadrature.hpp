#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stancu/bernstein.hpp"
#include "stancu/field.hpp"

namespace stancu {

/// Tensor midpoint grid on K: nodes (i + 0.5)/m, every cell weighing 1/m^2.
class GridSpec {
 public:
  explicit GridSpec(int m);

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] double node(int i) const noexcept { return (i + 0.5) / m_; }
  [[nodiscard]] double cell_weight() const noexcept { return cell_weight_; }
  [[nodiscard]] std::vector<double> nodes() const;

 private:
  int m_;
  double cell_weight_;
};

/// Axis-aligned integration window, intersected with K. Grid nodes outside
/// the window contribute nothing.
struct Box {
  double x1_lo = 0.0;
  double x1_hi = 1.0;
  double x2_lo = 0.0;
  double x2_hi = 1.0;

  [[nodiscard]] constexpr bool contains(double x1, double x2) const noexcept {
    return x1 >= x1_lo && x1 <= x1_hi && x2 >= x2_lo && x2 <= x2_hi;
  }
};

/// Midpoint-rule approximation of ∫∫_K |g|, accumulated over nodes in
/// row-major order (x1 outer, x2 inner) with compensated summation.
/// Throws NumericError naming the node if g is not finite there.
[[nodiscard]] double l1_norm_2d(const PlaneFunction& g, const GridSpec& grid, const Box& region = {});

/// Same as l1_norm_2d for values already tabulated on the grid
/// (`values[i * m + j]` at node (x1_i, x2_j)).
[[nodiscard]] double l1_norm_values(std::span<const double> values, const GridSpec& grid);

/// ln Γ(x) for x > 0; relative error below 1e-12 on [1, 5000].
[[nodiscard]] double log_gamma(double x);

/// n^2 C(n-1,k1) C(n-1,k2) B(k1+1, n-k1) B(k2+1, n-k2), evaluated in log space
/// with binomials from the cache and Beta functions through log_gamma.
/// Analytically equal to 1 for every 0 <= k1, k2 < n.
[[nodiscard]] double beta_weight_identity(const BasisCache& cache, int n, int k1, int k2);

/// Globally adaptive Simpson quadrature of f over [a, b] with absolute error
/// estimate <= tol. Throws NumericError when an interval cannot be refined further.
[[nodiscard]] double integrate_cell(const LineFunction& f, double a, double b, double tol);

/// Gauss–Legendre nodes and weights mapped to [a, b].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

[[nodiscard]] QuadratureRule gauss_legendre(int points, double a, double b);

}  // namespace stancu
