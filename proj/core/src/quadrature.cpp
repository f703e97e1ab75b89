#include "stancu/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

#include "stancu/errors.hpp"
#include "stancu/summation.hpp"

namespace stancu {

GridSpec::GridSpec(int m) : m_(m), cell_weight_(1.0 / (static_cast<double>(m) * m)) {
  if (m < 2) {
    throw ConfigError("grid needs m >= 2 points per axis, got " + std::to_string(m));
  }
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> out(m_);
  for (int i = 0; i < m_; ++i) {
    out[i] = node(i);
  }
  return out;
}

namespace {

[[noreturn]] void non_finite(double x1, double x2, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite integrand " << value << " at node (" << x1 << ", " << x2 << ")";
  throw NumericError(os.str());
}

}  // namespace

double l1_norm_2d(const PlaneFunction& g, const GridSpec& grid, const Box& region) {
  CompensatedSum acc;
  for (int i = 0; i < grid.m(); ++i) {
    const double x1 = grid.node(i);
    for (int j = 0; j < grid.m(); ++j) {
      const double x2 = grid.node(j);
      if (!region.contains(x1, x2)) {
        continue;
      }
      const double v = g(x1, x2);
      if (!std::isfinite(v)) {
        non_finite(x1, x2, v);
      }
      acc.add(std::abs(v));
    }
  }
  return acc.value() * grid.cell_weight();
}

double l1_norm_values(std::span<const double> values, const GridSpec& grid) {
  const int m = grid.m();
  if (values.size() != static_cast<std::size_t>(m) * m) {
    throw DomainError("l1_norm_values expects m*m values");
  }
  CompensatedSum acc;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double v = values[static_cast<std::size_t>(i) * m + j];
      if (!std::isfinite(v)) {
        non_finite(grid.node(i), grid.node(j), v);
      }
      acc.add(std::abs(v));
    }
  }
  return acc.value() * grid.cell_weight();
}

double beta_weight_identity(const BasisCache& cache, int n, int k1, int k2) {
  if (n < 1 || k1 < 0 || k2 < 0 || k1 >= n || k2 >= n) {
    throw DomainError("beta weight needs 0 <= k1, k2 < n");
  }
  if (n - 1 > cache.max_n()) {
    throw DomainError("beta weight degree exceeds the basis cache");
  }
  const double lg_total = log_gamma(n + 1.0);
  const auto log_beta = [&](int k) { return log_gamma(k + 1.0) + log_gamma(static_cast<double>(n - k)) - lg_total; };
  const double log_weight = 2.0 * std::log(static_cast<double>(n)) + log_binomial(cache, n - 1, k1) +
                            log_binomial(cache, n - 1, k2) + log_beta(k1) + log_beta(k2);
  return std::exp(log_weight);
}

namespace {

struct Segment {
  double a;
  double b;
  double fa;
  double fl;  // f at the left quarter point
  double fm;
  double fr;  // f at the right quarter point
  double fb;
  double whole;    // Simpson on [a, b]
  double refined;  // Richardson-corrected two-panel Simpson
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Segment& lhs, const Segment& rhs) const noexcept { return lhs.error < rhs.error; }
};

constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxSegments = 200000;

double checked(const LineFunction& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand " << v << " at t = " << t;
    throw NumericError(os.str());
  }
  return v;
}

Segment make_segment(const LineFunction& f, double a, double b, double fa, double fm, double fb, double whole,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double h = b - a;
  const double flm = checked(f, 0.5 * (a + m));
  const double frm = checked(f, 0.5 * (m + b));
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double two = left + right;
  return {a, b, fa, flm, fm, frm, fb, whole, two + (two - whole) / 15.0, std::abs(two - whole) / 15.0, depth};
}

}  // namespace

double integrate_cell(const LineFunction& f, double a, double b, double tol) {
  if (!(a < b)) {
    throw DomainError("integrate_cell needs a < b");
  }
  if (!(tol > 0.0)) {
    throw DomainError("integrate_cell needs tol > 0");
  }
  const double fa = checked(f, a);
  const double fb = checked(f, b);
  const double fm = checked(f, 0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);

  std::priority_queue<Segment, std::vector<Segment>, ByError> open;
  std::vector<Segment> done;
  open.push(make_segment(f, a, b, fa, fm, fb, whole, 0));
  double total_error = open.top().error;

  while (total_error > tol) {
    Segment s = open.top();
    open.pop();
    if (s.depth >= kMaxDepth || open.size() + done.size() > kMaxSegments) {
      std::ostringstream os;
      os.precision(17);
      os << "adaptive Simpson did not converge on [" << a << ", " << b << "]: error estimate " << total_error
         << " > " << tol << " after refining to [" << s.a << ", " << s.b << "]";
      throw NumericError(os.str());
    }
    const double m = 0.5 * (s.a + s.b);
    const double h = s.b - s.a;
    const double left_whole = h / 12.0 * (s.fa + 4.0 * s.fl + s.fm);
    const double right_whole = h / 12.0 * (s.fm + 4.0 * s.fr + s.fb);
    Segment left = make_segment(f, s.a, m, s.fa, s.fl, s.fm, left_whole, s.depth + 1);
    Segment right = make_segment(f, m, s.b, s.fm, s.fr, s.fb, right_whole, s.depth + 1);
    total_error += left.error + right.error - s.error;
    open.push(left);
    open.push(right);
    if (total_error <= tol) {
      // Guard against drift in the running total before stopping.
      double exact = 0.0;
      auto copy = open;
      while (!copy.empty()) {
        exact += copy.top().error;
        copy.pop();
      }
      total_error = exact;
    }
  }

  while (!open.empty()) {
    done.push_back(open.top());
    open.pop();
  }
  std::sort(done.begin(), done.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  CompensatedSum acc;
  for (const auto& s : done) {
    acc.add(s.refined);
  }
  return acc.value();
}

QuadratureRule gauss_legendre(int points, double a, double b) {
  if (points < 1) {
    throw DomainError("gauss_legendre needs at least one point");
  }
  QuadratureRule rule{std::vector<double>(points), std::vector<double>(points)};
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= points; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = points * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[points - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[points - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace stancu
