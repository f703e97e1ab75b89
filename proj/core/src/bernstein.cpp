#include "stancu/bernstein.hpp"

#include <cmath>
#include <string>

#include "stancu/errors.hpp"
#include "stancu/summation.hpp"
#include "stancu/tensor_kernel.hpp"

namespace stancu {

namespace {

void check_degree(const BasisCache& cache, int n, int k) {
  if (n < 0 || k < 0 || k > n || n > cache.max_n()) {
    throw DomainError("binomial index out of range: n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " max_n=" + std::to_string(cache.max_n()));
  }
}

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0,1], got " + std::to_string(x));
  }
}

// exp(ln C(n,k) + k ln x + (n-k) ln(1-x)) for x strictly inside (0,1).
inline double interior_basis(long double log_c, int n, int k, long double log_x, long double log_1mx) noexcept {
  const long double e = log_c + static_cast<long double>(k) * log_x + static_cast<long double>(n - k) * log_1mx;
  return static_cast<double>(std::exp(e));
}

inline double endpoint_basis(int n, int k, double x) noexcept {
  if (x == 0.0) {
    return k == 0 ? 1.0 : 0.0;
  }
  return k == n ? 1.0 : 0.0;
}

}  // namespace

BasisCache::BasisCache(int max_n) : max_n_(max_n) {
  if (max_n < 1) {
    throw DomainError("BasisCache needs max_n >= 1");
  }
  log_factorial_.resize(static_cast<std::size_t>(max_n) + 1);
  log_factorial_[0] = 0.0L;
  for (int k = 1; k <= max_n; ++k) {
    log_factorial_[k] = std::lgamma(static_cast<long double>(k) + 1.0L);
  }
  // lgamma is exact at 1 and 2; pin ln 1! as well for an exact table head.
  log_factorial_[1] = 0.0L;
}

long double BasisCache::log_factorial(int k) const {
  if (k < 0 || k > max_n_) {
    throw DomainError("log_factorial index out of range: " + std::to_string(k));
  }
  return log_factorial_[k];
}

long double BasisCache::log_binomial_ext(int n, int k) const {
  check_degree(*this, n, k);
  return log_factorial_[n] - log_factorial_[k] - log_factorial_[n - k];
}

double log_binomial(const BasisCache& cache, int n, int k) {
  return static_cast<double>(cache.log_binomial_ext(n, k));
}

double basis_1d(const BasisCache& cache, int n, int k, double x) {
  check_degree(cache, n, k);
  check_unit(x, "x");
  if (x == 0.0 || x == 1.0) {
    return endpoint_basis(n, k, x);
  }
  const long double lx = std::log(static_cast<long double>(x));
  const long double l1mx = std::log1p(-static_cast<long double>(x));
  return interior_basis(cache.log_binomial_ext(n, k), n, k, lx, l1mx);
}

void basis_row(const BasisCache& cache, int n, double x, std::span<double> out) {
  check_degree(cache, n, 0);
  check_unit(x, "x");
  if (out.size() != static_cast<std::size_t>(n) + 1) {
    throw DomainError("basis_row output must hold n+1 values");
  }
  if (x == 0.0 || x == 1.0) {
    for (int k = 0; k <= n; ++k) {
      out[k] = endpoint_basis(n, k, x);
    }
    return;
  }
  const long double lx = std::log(static_cast<long double>(x));
  const long double l1mx = std::log1p(-static_cast<long double>(x));
  for (int k = 0; k <= n; ++k) {
    out[k] = interior_basis(cache.log_binomial_ext(n, k), n, k, lx, l1mx);
  }
}

std::vector<double> basis_row(const BasisCache& cache, int n, double x) {
  std::vector<double> out(static_cast<std::size_t>(n < 0 ? 0 : n) + 1);
  basis_row(cache, n, x, out);
  return out;
}

double bernstein_1d(const BasisCache& cache, const LineFunction& f, int n, double x) {
  if (n < 1) {
    throw DomainError("bernstein_1d needs n >= 1");
  }
  const auto b = basis_row(cache, n, x);
  CompensatedSum acc;
  for (int k = 0; k <= n; ++k) {
    // Skip exact zeros so endpoint interpolation returns f(0), f(1) bit for bit.
    if (b[k] != 0.0) {
      acc.add(f(static_cast<double>(k) / n) * b[k]);
    }
  }
  return acc.value();
}

double bernstein_2d(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2) {
  return evaluate_streaming(cache, f, n, {}, Derivative::value, x1, x2);
}

double bernstein_2d_dx1(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2) {
  return evaluate_streaming(cache, f, n, {}, Derivative::dx1, x1, x2);
}

double bernstein_2d_dx2(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2) {
  return evaluate_streaming(cache, f, n, {}, Derivative::dx2, x1, x2);
}

double bernstein_2d_dx1dx2(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2,
                           MixedOrder order) {
  return evaluate_streaming(cache, f, n, {}, Derivative::dx1dx2, x1, x2, order);
}

}  // namespace stancu
