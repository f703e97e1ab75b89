#include <array>
#include <cmath>
#include <numbers>

#include "stancu/errors.hpp"
#include "stancu/quadrature.hpp"

namespace stancu {

namespace {

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// (zeta(k) - 1) / k for k = 2..21: ln Γ(2+z) = (1-γ) z + Σ (-1)^k c_k z^k.
constexpr std::array<double, 20> kZetaSeries = {
    0.32246703342411321824,   0.067352301053198095133,  0.020580808427784547879,  0.0073855510286739852663,
    0.0028905103307415232858, 0.0011927539117032609771, 0.00050966952474304242234, 0.00022315475845357937976,
    9.9457512781808533715e-5, 4.49262367381331417e-5,   2.0507212775670691553e-5, 9.439488275268395904e-6,
    4.3748667899074878042e-6, 2.0392157538013662368e-6, 9.5514121304074198329e-7, 4.4924691987645660433e-7,
    2.1207184805554665869e-7, 1.0043224823968099609e-7, 4.7698101693639805658e-8, 2.271109460894316491e-8,
};
constexpr double kEulerGamma = 0.5772156649015328606;

// ln Γ(2+z), |z| <= 1/4.
double log_gamma_near_two(double z) {
  const double w = -z;
  double acc = 0.0;
  for (std::size_t i = kZetaSeries.size(); i-- > 0;) {
    acc = acc * w + kZetaSeries[i];
  }
  return (1.0 - kEulerGamma) * z + acc * w * w;
}

double lanczos(double x) {
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma needs x > 0");
  }
  if (std::isinf(x)) {
    return x;
  }
  if (x <= 20.0 && x == std::floor(x)) {
    // (k-1)! is exact in double for k <= 20.
    double factorial = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) {
      factorial *= k;
    }
    return std::log(factorial);
  }
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  if (std::abs(x - 2.0) <= 0.25) {
    return log_gamma_near_two(x - 2.0);
  }
  if (std::abs(x - 1.0) <= 0.25) {
    const double z = x - 1.0;
    return log_gamma_near_two(z) - std::log1p(z);
  }
  return lanczos(x);
}

}  // namespace stancu
