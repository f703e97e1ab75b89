#include "stancu/tensor_kernel.hpp"

#include <string>

#include "stancu/errors.hpp"
#include "stancu/summation.hpp"

namespace stancu {

namespace {

inline double node(int k, double shift, int n) noexcept { return (k + shift) / n; }

int checked_degree(int n) {
  if (n < 1) {
    throw DomainError("operator degree must be >= 1, got " + std::to_string(n));
  }
  return n;
}

void check_operator_args(int n, double x1, double x2) {
  if (n < 1) {
    throw DomainError("operator degree must be >= 1, got " + std::to_string(n));
  }
  if (!(x1 >= 0.0 && x1 <= 1.0 && x2 >= 0.0 && x2 <= 1.0)) {
    throw DomainError("evaluation point must lie in [0,1]^2");
  }
}

// Two adjacent sample rows k1 and k1+1 of the shifted lattice.
class RollingRows {
 public:
  RollingRows(const ScalarField2& f, int n, ShiftVector shift)
      : f_(f), n_(n), shift_(shift), lo_(n + 1), hi_(n + 1) {
    fill(lo_, 0);
    fill(hi_, 1);
  }

  void advance() {
    ++base_;
    lo_.swap(hi_);
    if (base_ + 1 <= n_) {
      fill(hi_, base_ + 1);
    }
  }

  double operator()(int k1, int k2) const noexcept { return (k1 == base_ ? lo_ : hi_)[k2]; }

 private:
  void fill(std::vector<double>& row, int k1) const {
    const double t1 = node(k1, shift_.a1, n_);
    for (int k2 = 0; k2 <= n_; ++k2) {
      row[k2] = f_.eval(t1, node(k2, shift_.a2, n_));
    }
  }

  const ScalarField2& f_;
  int n_;
  ShiftVector shift_;
  int base_ = 0;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

}  // namespace

void ShiftVector::validate() const {
  if (!(a1 >= 0.0 && a1 <= 1.0 && a2 >= 0.0 && a2 <= 1.0)) {
    throw DomainError("shift components must lie in [0,1]");
  }
}

NodeSamples::NodeSamples(const ScalarField2& f, int n, ShiftVector shift)
    : n_(checked_degree(n)), values_(static_cast<std::size_t>(n + 1) * (n + 1)) {
  shift.validate();
  for (int k1 = 0; k1 <= n; ++k1) {
    const double t1 = node(k1, shift.a1, n);
    for (int k2 = 0; k2 <= n; ++k2) {
      values_[k1 * (n + 1) + k2] = f.eval(t1, node(k2, shift.a2, n));
    }
  }
}

double derivative_scale(Derivative which, int n) noexcept {
  const double dn = n;
  switch (which) {
    case Derivative::value:
      return 1.0;
    case Derivative::dx1:
    case Derivative::dx2:
      return dn;
    case Derivative::dx1dx2:
      return dn * dn;
  }
  return 1.0;
}

BernsteinForm2::BernsteinForm2(const NodeSamples& samples, Derivative which, MixedOrder order)
    : n_(samples.n()),
      degree1_(form_degree1(which, samples.n())),
      degree2_(form_degree2(which, samples.n())),
      scale_(derivative_scale(which, samples.n())),
      coefficients_(static_cast<std::size_t>(degree1_ + 1) * (degree2_ + 1)) {
  for (int k1 = 0; k1 <= degree1_; ++k1) {
    for (int k2 = 0; k2 <= degree2_; ++k2) {
      coefficients_[k1 * (degree2_ + 1) + k2] = difference_coefficient(samples, which, order, k1, k2);
    }
  }
}

double evaluate_form(const BasisCache& cache, const BernsteinForm2& form, double x1, double x2) {
  check_operator_args(form.n(), x1, x2);
  const auto b1 = basis_row(cache, form.degree1(), x1);
  const auto b2 = basis_row(cache, form.degree2(), x2);
  CompensatedSum outer;
  for (int k1 = 0; k1 <= form.degree1(); ++k1) {
    const auto c = form.row(k1);
    CompensatedSum inner;
    for (int k2 = 0; k2 <= form.degree2(); ++k2) {
      inner.add(c[k2] * b2[k2]);
    }
    outer.add(b1[k1] * inner.value());
  }
  return form.scale() * outer.value();
}

double evaluate_streaming(const BasisCache& cache, const ScalarField2& f, int n, ShiftVector shift,
                          Derivative which, double x1, double x2, MixedOrder order) {
  check_operator_args(n, x1, x2);
  shift.validate();
  const int d1 = form_degree1(which, n);
  const int d2 = form_degree2(which, n);
  const auto b1 = basis_row(cache, d1, x1);
  const auto b2 = basis_row(cache, d2, x2);
  RollingRows rows(f, n, shift);
  CompensatedSum outer;
  for (int k1 = 0; k1 <= d1; ++k1) {
    if (k1 > 0) {
      rows.advance();
    }
    CompensatedSum inner;
    for (int k2 = 0; k2 <= d2; ++k2) {
      inner.add(difference_coefficient(rows, which, order, k1, k2) * b2[k2]);
    }
    outer.add(b1[k1] * inner.value());
  }
  return derivative_scale(which, n) * outer.value();
}

GridEvaluator::GridEvaluator(const BasisCache& cache, const GridSpec& grid, int n) : n_(n), grid_(grid) {
  if (n < 1) {
    throw DomainError("operator degree must be >= 1");
  }
  const int m = grid.m();
  basis_n_.resize(static_cast<std::size_t>(m) * (n + 1));
  basis_n_minus_.resize(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < m; ++j) {
    const double x = grid.node(j);
    basis_row(cache, n, x, std::span<double>(basis_n_).subspan(static_cast<std::size_t>(j) * (n + 1), n + 1));
    basis_row(cache, n - 1, x, std::span<double>(basis_n_minus_).subspan(static_cast<std::size_t>(j) * n, n));
  }
}

const std::vector<double>& GridEvaluator::table(int degree) const {
  return degree == n_ ? basis_n_ : basis_n_minus_;
}

void GridEvaluator::evaluate(const BernsteinForm2& form, std::span<double> out) const {
  if (form.n() != n_) {
    throw DomainError("form degree does not match the grid evaluator");
  }
  const int m = grid_.m();
  if (out.size() != static_cast<std::size_t>(m) * m) {
    throw DomainError("grid output must hold m*m values");
  }
  const int d1 = form.degree1();
  const int d2 = form.degree2();
  const auto& b1 = table(d1);
  const auto& b2 = table(d2);

  // partial[k1 * m + j] = sum_k2 c[k1][k2] b_{d2,k2}(x2_j)
  std::vector<double> partial(static_cast<std::size_t>(d1 + 1) * m);
  for (int k1 = 0; k1 <= d1; ++k1) {
    const auto c = form.row(k1);
    for (int j = 0; j < m; ++j) {
      const double* bj = b2.data() + static_cast<std::size_t>(j) * (d2 + 1);
      CompensatedSum inner;
      for (int k2 = 0; k2 <= d2; ++k2) {
        inner.add(c[k2] * bj[k2]);
      }
      partial[static_cast<std::size_t>(k1) * m + j] = inner.value();
    }
  }

  std::vector<CompensatedSum> sums(m);
  for (int i = 0; i < m; ++i) {
    const double* bi = b1.data() + static_cast<std::size_t>(i) * (d1 + 1);
    std::fill(sums.begin(), sums.end(), CompensatedSum{});
    for (int k1 = 0; k1 <= d1; ++k1) {
      const double w = bi[k1];
      const double* p = partial.data() + static_cast<std::size_t>(k1) * m;
      for (int j = 0; j < m; ++j) {
        sums[j].add(w * p[j]);
      }
    }
    for (int j = 0; j < m; ++j) {
      out[static_cast<std::size_t>(i) * m + j] = form.scale() * sums[j].value();
    }
  }
}

std::vector<double> GridEvaluator::evaluate(const BernsteinForm2& form) const {
  std::vector<double> out(static_cast<std::size_t>(grid_.m()) * grid_.m());
  evaluate(form, out);
  return out;
}

}  // namespace stancu
