#pragma once

#include <span>
#include <vector>

#include "stancu/field.hpp"

namespace stancu {

/// Log-factorial table backing every binomial coefficient in the library.
///
/// Entries are held in extended precision so that the log-space basis stays
/// accurate to a few ulp of double up to n = 4096, where ln(n!) ~ 3e4 and a
/// double-precision table alone would already cost ~1e-12 relative error.
/// Immutable after construction; share one instance across threads.
class BasisCache {
 public:
  static constexpr int default_max_n = 4096;

  explicit BasisCache(int max_n = default_max_n);

  [[nodiscard]] int max_n() const noexcept { return max_n_; }

  /// ln(k!) for 0 <= k <= max_n.
  [[nodiscard]] long double log_factorial(int k) const;

  /// ln C(n, k) in extended precision; throws DomainError unless 0 <= k <= n <= max_n.
  [[nodiscard]] long double log_binomial_ext(int n, int k) const;

 private:
  int max_n_;
  std::vector<long double> log_factorial_;
};

/// ln C(n, k).
[[nodiscard]] double log_binomial(const BasisCache& cache, int n, int k);

/// C(n,k) x^k (1-x)^(n-k). Exact 0 or 1 at the endpoints x = 0 and x = 1.
[[nodiscard]] double basis_1d(const BasisCache& cache, int n, int k, double x);

/// All n+1 basis values of degree n at x. `out.size()` must be n + 1.
/// Bit-identical to calling basis_1d for each k.
void basis_row(const BasisCache& cache, int n, double x, std::span<double> out);

[[nodiscard]] std::vector<double> basis_row(const BasisCache& cache, int n, double x);

/// B_n(f, x) = sum_k f(k/n) C(n,k) x^k (1-x)^(n-k).
[[nodiscard]] double bernstein_1d(const BasisCache& cache, const LineFunction& f, int n, double x);

/// Order of the two forward differences in a mixed second difference.
/// `delta1_of_delta2` is Δ(x1)[Δ(x2) f]: difference in x2 first, then in x1.
enum class MixedOrder { delta1_of_delta2, delta2_of_delta1 };

/// Tensor-product Bernstein polynomial of f on K (same degree n in both variables).
/// Cost O(n^2) evaluations of f per point with O(n) working storage.
[[nodiscard]] double bernstein_2d(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2);

/// d/dx1 of bernstein_2d in difference form:
///   n sum_{k1<n, k2<=n} [f((k1+1)/n, k2/n) - f(k1/n, k2/n)] b_{n-1,k1}(x1) b_{n,k2}(x2).
[[nodiscard]] double bernstein_2d_dx1(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2);

/// d/dx2 of bernstein_2d; mirror of bernstein_2d_dx1.
[[nodiscard]] double bernstein_2d_dx2(const BasisCache& cache, const ScalarField2& f, int n, double x1, double x2);

/// d^2/dx1dx2 of bernstein_2d:
///   n^2 sum_{k1,k2<n} [Δ(x1)Δ(x2) f](k1/n, k2/n) Π_{k1,k2}(x1, x2),
/// with Π the degree-(n-1) tensor basis product.
[[nodiscard]] double bernstein_2d_dx1dx2(const BasisCache& cache, const ScalarField2& f, int n, double x1,
                                         double x2, MixedOrder order = MixedOrder::delta1_of_delta2);

}  // namespace stancu
