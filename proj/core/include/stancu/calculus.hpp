#pragma once

// Forward differences, the L1 difference-quotient error functionals,
// Gaussian mollification, and the Lorentz integral polynomial.

#include <optional>
#include <string_view>
#include <vector>

#include "stancu/bernstein.hpp"
#include "stancu/field.hpp"
#include "stancu/quadrature.hpp"

namespace stancu {

/// (x1, x2) ↦ f(x1 + h, x2) - f(x1, x2). Requires h > 0.
[[nodiscard]] PlaneFunction delta_x1(PlaneFunction f, double h);
/// (x1, x2) ↦ f(x1, x2 + h) - f(x1, x2). Requires h > 0.
[[nodiscard]] PlaneFunction delta_x2(PlaneFunction f, double h);

/// Differences of the zero-extended field.
[[nodiscard]] PlaneFunction delta_x1(const ScalarField2& f, double h);
[[nodiscard]] PlaneFunction delta_x2(const ScalarField2& f, double h);

/// ∑_grid |n (f(x1+1/n, x2) - f(x1, x2)) - f_x1_ref(x1, x2)| / m^2 over nodes in `region`.
[[nodiscard]] double lemma_eqle1_error(const PlaneFunction& f, const PlaneFunction& f_x1_ref, int n,
                                       const GridSpec& grid, const Box& region = {});

/// Uses f.eval and the analytic dx1 partial. Throws ConfigError if dx1 is missing.
[[nodiscard]] double lemma_eqle1_error(const ScalarField2& f, int n, const GridSpec& grid, const Box& region = {});

/// eqle1 with f_x2 in place of f and f_x1x2 as reference.
[[nodiscard]] double lemma_eqle2_error(const PlaneFunction& f_x2, const PlaneFunction& f_x1x2_ref, int n,
                                       const GridSpec& grid, const Box& region = {});

/// Uses the analytic dx2 and dx1dx2 partials of f (zero-extended).
[[nodiscard]] double lemma_eqle2_error(const ScalarField2& f, int n, const GridSpec& grid, const Box& region = {});

/// verbatim:  |n^2 Δ2 Δ1 f_x2 - n Δ1 f_x2|
/// corrected: |n^2 Δ2 Δ1 f    - n Δ1 f_x2|
enum class Eqle3Variant { verbatim, corrected };

[[nodiscard]] std::string_view to_string(Eqle3Variant variant) noexcept;
[[nodiscard]] std::optional<Eqle3Variant> parse_eqle3_variant(std::string_view text) noexcept;

[[nodiscard]] double lemma_eqle3_error(const PlaneFunction& f, const PlaneFunction& f_x2, int n, const GridSpec& grid,
                                       Eqle3Variant variant = Eqle3Variant::verbatim, const Box& region = {});

/// Uses f.eval and the analytic dx2 partial. Throws ConfigError if dx2 is missing.
[[nodiscard]] double lemma_eqle3_error(const ScalarField2& f, int n, const GridSpec& grid,
                                       Eqle3Variant variant = Eqle3Variant::verbatim, const Box& region = {});

/// Gaussian kernel φ^ε(y) = φ(y/ε)/ε truncated to [-Rε, Rε] per axis and
/// integrated by Gauss–Legendre.
struct MollifierSpec {
  double epsilon = 0.05;
  double truncation_radius = 6.0;  // in units of epsilon
  int quad_points = 64;            // per axis

  /// Throws ConfigError unless epsilon > 0, truncation_radius >= 4, quad_points >= 16.
  void validate() const;
};

/// ∫∫ of the discretized kernel; 1 up to the truncated tail.
[[nodiscard]] double mollifier_mass(const MollifierSpec& spec);

/// f^ε = f * (φ^ε ⊗ φ^ε) evaluated by tensor quadrature of the zero-extended f.
/// The result lives on the whole plane (Support::plane).
[[nodiscard]] ScalarField2 mollify(const ScalarField2& f, const MollifierSpec& spec);

/// P_n(f, x) = Σ_k b_{n,k}(x) (n+1) ∫_{k/(n+1)}^{(k+1)/(n+1)} f(t) dt.
///
/// Cell integrals are computed once at construction by adaptive Simpson; a
/// failing cell raises NumericError naming the cell index.
class LorentzPolynomial {
 public:
  LorentzPolynomial(const BasisCache& cache, const LineFunction& f, int n, double tol = 1e-10);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<double>& cell_averages() const noexcept { return averages_; }
  [[nodiscard]] double operator()(double x) const;

 private:
  const BasisCache* cache_;
  int n_;
  std::vector<double> averages_;
};

[[nodiscard]] double lorentz_pn(const BasisCache& cache, const LineFunction& f, int n, double x, double tol = 1e-10);

/// ∑_grid |g(x1 + a, x2 + b) - g(x1, x2)| / m^2.
[[nodiscard]] double translation_l1_modulus(const PlaneFunction& g, double a, double b, const GridSpec& grid);
/// Same, through the zero extension of g.
[[nodiscard]] double translation_l1_modulus(const ScalarField2& g, double a, double b, const GridSpec& grid);

}  // namespace stancu
