#include "stancu/calculus.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>

#include "stancu/errors.hpp"
#include "stancu/summation.hpp"

namespace stancu {

namespace {

void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ConfigError("difference step must be positive and finite");
  }
}

void require_degree(int n) {
  if (n < 1) {
    throw ConfigError("degree n must be >= 1, got " + std::to_string(n));
  }
}

void require_partial(const ScalarField2& f, Derivative which, std::string_view purpose) {
  if (!f.has(which)) {
    throw ConfigError(std::string(purpose) + " needs the analytic " + std::string(to_string(which)) +
                      " partial of '" + f.name() + "'");
  }
}

}  // namespace

PlaneFunction delta_x1(PlaneFunction f, double h) {
  require_step(h);
  return [f = std::move(f), h](double x1, double x2) { return f(x1 + h, x2) - f(x1, x2); };
}

PlaneFunction delta_x2(PlaneFunction f, double h) {
  require_step(h);
  return [f = std::move(f), h](double x1, double x2) { return f(x1, x2 + h) - f(x1, x2); };
}

PlaneFunction delta_x1(const ScalarField2& f, double h) { return delta_x1(f.function(), h); }
PlaneFunction delta_x2(const ScalarField2& f, double h) { return delta_x2(f.function(), h); }

double lemma_eqle1_error(const PlaneFunction& f, const PlaneFunction& f_x1_ref, int n, const GridSpec& grid,
                         const Box& region) {
  require_degree(n);
  const double h = 1.0 / n;
  const double scale = n;
  return l1_norm_2d(
      [&](double x1, double x2) { return scale * (f(x1 + h, x2) - f(x1, x2)) - f_x1_ref(x1, x2); }, grid, region);
}

double lemma_eqle1_error(const ScalarField2& f, int n, const GridSpec& grid, const Box& region) {
  require_partial(f, Derivative::dx1, "eqle1");
  return lemma_eqle1_error(f.function(), f.function(Derivative::dx1), n, grid, region);
}

double lemma_eqle2_error(const PlaneFunction& f_x2, const PlaneFunction& f_x1x2_ref, int n, const GridSpec& grid,
                         const Box& region) {
  return lemma_eqle1_error(f_x2, f_x1x2_ref, n, grid, region);
}

double lemma_eqle2_error(const ScalarField2& f, int n, const GridSpec& grid, const Box& region) {
  require_partial(f, Derivative::dx2, "eqle2");
  require_partial(f, Derivative::dx1dx2, "eqle2");
  return lemma_eqle2_error(f.function(Derivative::dx2), f.function(Derivative::dx1dx2), n, grid, region);
}

std::string_view to_string(Eqle3Variant variant) noexcept {
  return variant == Eqle3Variant::verbatim ? "verbatim" : "corrected";
}

std::optional<Eqle3Variant> parse_eqle3_variant(std::string_view text) noexcept {
  if (text == "verbatim") {
    return Eqle3Variant::verbatim;
  }
  if (text == "corrected") {
    return Eqle3Variant::corrected;
  }
  return std::nullopt;
}

double lemma_eqle3_error(const PlaneFunction& f, const PlaneFunction& f_x2, int n, const GridSpec& grid,
                         Eqle3Variant variant, const Box& region) {
  require_degree(n);
  const double h = 1.0 / n;
  const double nn = static_cast<double>(n) * n;
  const double n1 = n;
  const PlaneFunction& mixed_source = variant == Eqle3Variant::verbatim ? f_x2 : f;
  return l1_norm_2d(
      [&](double x1, double x2) {
        const double d1_fx2 = f_x2(x1 + h, x2) - f_x2(x1, x2);
        const double d1_upper = mixed_source(x1 + h, x2 + h) - mixed_source(x1, x2 + h);
        const double d1_lower = mixed_source(x1 + h, x2) - mixed_source(x1, x2);
        return nn * (d1_upper - d1_lower) - n1 * d1_fx2;
      },
      grid, region);
}

double lemma_eqle3_error(const ScalarField2& f, int n, const GridSpec& grid, Eqle3Variant variant,
                         const Box& region) {
  require_partial(f, Derivative::dx2, "eqle3");
  return lemma_eqle3_error(f.function(), f.function(Derivative::dx2), n, grid, variant, region);
}

void MollifierSpec::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("mollifier epsilon must be positive and finite");
  }
  if (!(truncation_radius >= 4.0) || !std::isfinite(truncation_radius)) {
    throw ConfigError("mollifier truncation radius must be >= 4");
  }
  if (quad_points < 16) {
    throw ConfigError("mollifier needs >= 16 quadrature points per axis");
  }
}

namespace {

/// Nodes y_i and weights w_i φ^ε(y_i) of the one-dimensional kernel rule.
QuadratureRule kernel_rule(const MollifierSpec& spec) {
  spec.validate();
  const double half_width = spec.truncation_radius * spec.epsilon;
  QuadratureRule rule = gauss_legendre(spec.quad_points, -half_width, half_width);
  const double norm = 1.0 / (spec.epsilon * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i] / spec.epsilon;
    rule.weights[i] *= norm * std::exp(-0.5 * u * u);
  }
  return rule;
}

}  // namespace

double mollifier_mass(const MollifierSpec& spec) {
  const QuadratureRule rule = kernel_rule(spec);
  CompensatedSum line;
  for (double w : rule.weights) {
    line.add(w);
  }
  return line.value() * line.value();
}

ScalarField2 mollify(const ScalarField2& f, const MollifierSpec& spec) {
  auto rule = std::make_shared<const QuadratureRule>(kernel_rule(spec));
  auto source = f.function();
  auto convolved = [rule, source](double x1, double x2) {
    const std::size_t q = rule->nodes.size();
    CompensatedSum total;
    for (std::size_t i = 0; i < q; ++i) {
      const double u1 = x1 - rule->nodes[i];
      CompensatedSum inner;
      for (std::size_t j = 0; j < q; ++j) {
        inner.add(rule->weights[j] * source(u1, x2 - rule->nodes[j]));
      }
      total.add(rule->weights[i] * inner.value());
    }
    return total.value();
  };
  return ScalarField2(f.name() + "^eps", std::move(convolved), SmoothnessClass::smooth, Support::plane);
}

LorentzPolynomial::LorentzPolynomial(const BasisCache& cache, const LineFunction& f, int n, double tol)
    : cache_(&cache), n_(n) {
  require_degree(n);
  if (n > cache.max_n()) {
    throw DomainError("Lorentz degree exceeds the basis cache");
  }
  const double cells = n + 1;
  averages_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    try {
      averages_[k] = cells * integrate_cell(f, k / cells, (k + 1) / cells, tol);
    } catch (const NumericError& e) {
      throw NumericError("Lorentz cell " + std::to_string(k) + " of degree " + std::to_string(n) + ": " +
                         e.what());
    }
  }
}

double LorentzPolynomial::operator()(double x) const {
  const auto basis = basis_row(*cache_, n_, x);
  return compensated_dot(basis, averages_);
}

double lorentz_pn(const BasisCache& cache, const LineFunction& f, int n, double x, double tol) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("lorentz_pn requires x in [0, 1]");
  }
  return LorentzPolynomial(cache, f, n, tol)(x);
}

double translation_l1_modulus(const PlaneFunction& g, double a, double b, const GridSpec& grid) {
  return l1_norm_2d([&](double x1, double x2) { return g(x1 + a, x2 + b) - g(x1, x2); }, grid);
}

double translation_l1_modulus(const ScalarField2& g, double a, double b, const GridSpec& grid) {
  return translation_l1_modulus(g.function(), a, b, grid);
}

}  // namespace stancu
