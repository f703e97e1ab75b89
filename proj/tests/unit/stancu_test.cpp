#include "stancu/stancu.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "stancu/errors.hpp"
#include "support.hpp"

namespace stancu {
namespace {

using testing::central_mixed;
using testing::central_x1;
using testing::plane_field;
using testing::square_field;

const BasisCache& cache() {
  static const BasisCache instance(512);
  return instance;
}

double brute_force_stancu(const ScalarField2& f, int n, ShiftVector a, double x1, double x2) {
  double acc = 0.0;
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k2 <= n; ++k2) {
      acc += f.eval((k1 + a.a1) / n, (k2 + a.a2) / n) * basis_1d(cache(), n, k1, x1) * basis_1d(cache(), n, k2, x2);
    }
  }
  return acc;
}

TEST(Stancu2d, ZeroShiftMatchesBernstein) {
  const auto f = square_field("f", [](double x1, double x2) { return std::cos(3.0 * x1) * x2 + x1; });
  const GridSpec grid(8);
  for (int n : {1, 7, 64, 128}) {
    for (int i = 0; i < grid.m(); ++i) {
      for (int j = 0; j < grid.m(); ++j) {
        const double x1 = grid.node(i);
        const double x2 = grid.node(j);
        ASSERT_NEAR(stancu_2d(cache(), f, n, {0.0, 0.0}, x1, x2), bernstein_2d(cache(), f, n, x1, x2), 1e-12);
      }
    }
  }
}

TEST(Stancu2d, OnesLoseTheOutsideTerms) {
  // Nodes with k = n sit at 1 + 1/(2n), where the extension is zero: (1 - 2^-8)^2.
  const auto one = square_field("one", [](double, double) { return 1.0; });
  EXPECT_NEAR(stancu_2d(cache(), one, 8, {0.5, 0.5}, 0.5, 0.5), 0.9922027587890625, 1e-15);
}

TEST(Stancu2d, ProductMatchesExactSum) {
  const auto prod = square_field("prod", [](double x1, double x2) { return x1 * x2; });
  EXPECT_NEAR(stancu_2d(cache(), prod, 16, {0.25, 0.75}, 0.3, 0.6), 0.2040767039566750287, 1e-12);
}

TEST(Stancu2d, MatchesBruteForce) {
  const auto f = square_field("f", [](double x1, double x2) { return std::exp(-x1) * std::sin(2.0 * x2); });
  testing::Uniform u(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ShiftVector a{u(), u()};
    const int n = u.integer(1, 30);
    const double x1 = u();
    const double x2 = u();
    ASSERT_NEAR(stancu_2d(cache(), f, n, a, x1, x2), brute_force_stancu(f, n, a, x1, x2), 1e-12);
  }
}

TEST(Stancu2d, RejectsBadArguments) {
  const auto one = square_field("one", [](double, double) { return 1.0; });
  EXPECT_THROW((void)stancu_2d(cache(), one, 0, {0.5, 0.5}, 0.5, 0.5), DomainError);
  EXPECT_THROW((void)stancu_2d(cache(), one, 4, {1.5, 0.5}, 0.5, 0.5), DomainError);
  EXPECT_THROW((void)stancu_2d(cache(), one, 4, {0.5, 0.5}, 1.5, 0.5), DomainError);
}

TEST(StancuDx1, ConstantOnPlaneVanishes) {
  const auto c = plane_field("c", [](double, double) { return 4.0; });
  EXPECT_NEAR(stancu_dx1(cache(), c, 20, {0.7, 0.2}, 0.9, 0.1), 0.0, 1e-13);
}

TEST(StancuDx1, ZeroShiftMatchesBernsteinDerivative) {
  const auto f = square_field("f", [](double x1, double x2) { return x1 * x1 * x2 + std::sin(x2); });
  for (int n : {2, 15, 40}) {
    EXPECT_NEAR(stancu_dx1(cache(), f, n, {0.0, 0.0}, 0.3, 0.4), bernstein_2d_dx1(cache(), f, n, 0.3, 0.4), 1e-12);
  }
}

TEST(StancuDx1, MatchesBruteForceDifferenceSum) {
  const auto f = square_field("f", [](double x1, double x2) { return x1 * x1 * x2; });
  const int n = 12;
  const ShiftVector a{0.35, 0.6};
  const double x1 = 0.42;
  const double x2 = 0.77;
  double acc = 0.0;
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 <= n; ++k2) {
      const double d = f.eval((k1 + 1 + a.a1) / n, (k2 + a.a2) / n) - f.eval((k1 + a.a1) / n, (k2 + a.a2) / n);
      acc += d * basis_1d(cache(), n - 1, k1, x1) * basis_1d(cache(), n, k2, x2);
    }
  }
  EXPECT_NEAR(stancu_dx1(cache(), f, n, a, x1, x2), n * acc, 1e-12);
}

TEST(StancuDx1, MatchesFiniteDifference) {
  const auto f = square_field("x1^2 x2", [](double x1, double x2) { return x1 * x1 * x2; });
  const ShiftVector a{0.1, 0.9};
  auto s = [&](double x1, double x2) { return stancu_2d(cache(), f, 32, a, x1, x2); };
  EXPECT_NEAR(stancu_dx1(cache(), f, 32, a, 0.4, 0.6), central_x1(s, 0.4, 0.6, 1e-5), 1e-5);
}

TEST(StancuDx1dx2, BilinearPlaneFieldGivesOne) {
  const auto prod = plane_field("prod", [](double x1, double x2) { return x1 * x2; });
  testing::Uniform u(3);
  for (int trial = 0; trial < 30; ++trial) {
    const ShiftVector a{u(), u()};
    const int n = u.integer(1, 80);
    ASSERT_NEAR(stancu_dx1dx2(cache(), prod, n, a, u(), u()), 1.0, 1e-10) << n;
  }
}

TEST(StancuDx1dx2, ConstantOnPlaneVanishes) {
  const auto c = plane_field("c", [](double, double) { return -2.0; });
  EXPECT_NEAR(stancu_dx1dx2(cache(), c, 9, {0.2, 0.2}, 0.5, 0.5), 0.0, 1e-13);
}

TEST(StancuDx1dx2, MatchesMixedFiniteDifference) {
  const double pi = std::numbers::pi;
  const auto f = square_field("trig", [pi](double x1, double x2) { return std::sin(pi * x1) * std::cos(pi * x2); });
  const ShiftVector a{0.3, 0.7};
  auto s = [&](double x1, double x2) { return stancu_2d(cache(), f, 24, a, x1, x2); };
  EXPECT_NEAR(stancu_dx1dx2(cache(), f, 24, a, 0.4, 0.4), central_mixed(s, 0.4, 0.4, 1e-4), 1e-4);
}

TEST(StancuDerivatives, ConsistentWithFiniteDifferences) {
  const auto f = square_field("f", [](double x1, double x2) { return std::exp(x1 * x2) - x2 * x2; });
  const double points[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  const ShiftVector shifts[] = {{0.0, 0.0}, {0.25, 0.75}, {0.9, 0.4}};
  for (int n : {4, 16, 64}) {
    for (const auto& a : shifts) {
      auto s = [&](double x1, double x2) { return stancu_2d(cache(), f, n, a, x1, x2); };
      for (double x1 : points) {
        for (double x2 : points) {
          ASSERT_NEAR(stancu_dx1(cache(), f, n, a, x1, x2), central_x1(s, x1, x2, 1e-5), 1e-5);
          ASSERT_NEAR(stancu_dx1dx2(cache(), f, n, a, x1, x2), central_mixed(s, x1, x2, 1e-4), 1e-4);
        }
      }
    }
  }
}

TEST(Shifts, DeterministicAndInUnitSquare) {
  const auto a = draw_shifts(42, 100);
  const auto b = draw_shifts(42, 100);
  std::set<double> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].a1, b[i].a1);
    EXPECT_EQ(a[i].a2, b[i].a2);
    EXPECT_GE(a[i].a1, 0.0);
    EXPECT_LT(a[i].a1, 1.0);
    EXPECT_GE(a[i].a2, 0.0);
    EXPECT_LT(a[i].a2, 1.0);
    seen.insert(a[i].a1);
    const auto direct = draw_shift(42, i);
    EXPECT_EQ(direct.a1, a[i].a1);
  }
  EXPECT_EQ(seen.size(), a.size());
  EXPECT_NE(draw_shifts(43, 1)[0].a1, a[0].a1);
}

TEST(Shifts, RoughlyUniform) {
  const auto shifts = draw_shifts(1, 20000);
  double m1 = 0.0;
  double m2 = 0.0;
  for (const auto& s : shifts) {
    m1 += s.a1;
    m2 += s.a2 * s.a2;
  }
  EXPECT_NEAR(m1 / shifts.size(), 0.5, 0.01);
  EXPECT_NEAR(m2 / shifts.size(), 1.0 / 3.0, 0.01);
}

TEST(Summarize, MeanAndStandardError) {
  const double values[] = {1.0, 2.0, 3.0, 4.0};
  const auto e = summarize(values, 9);
  EXPECT_DOUBLE_EQ(e.mean, 2.5);
  // sample sd = sqrt(5/3); stderr = sd / 2
  EXPECT_NEAR(e.std_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  EXPECT_EQ(e.samples, 4);
  EXPECT_EQ(e.seed, 9u);
  const double one[] = {1.0};
  EXPECT_THROW((void)summarize(one, 0), ConfigError);
}

TEST(ExpectedL1Error, ExplicitShiftsMatchDirectAverage) {
  const auto f = square_field("f", [](double x1, double x2) { return std::sin(2.0 * x1) * x2 * (1.0 - x2); });
  const PlaneFunction reference = [](double x1, double x2) { return std::sin(2.0 * x1) * x2 * (1.0 - x2); };
  const GridSpec grid(16);
  const std::vector<ShiftVector> shifts{{0.1, 0.2}, {0.5, 0.5}, {0.9, 0.05}, {0.33, 0.66}};
  const auto e = expected_l1_error(cache(), f, reference, Derivative::value, 64, grid, shifts, 0);

  double direct = 0.0;
  for (const auto& a : shifts) {
    direct += l1_norm_2d(
        [&](double x1, double x2) { return stancu_2d(cache(), f, 64, a, x1, x2) - reference(x1, x2); }, grid);
  }
  direct /= shifts.size();
  EXPECT_LE(std::abs(e.mean - direct), 3.0 * e.std_error);
  EXPECT_NEAR(e.mean, direct, 1e-14);
  EXPECT_EQ(e.samples, 4);
}

TEST(ExpectedL1Error, ZeroFieldHasZeroErrorAndSpread) {
  const auto zero = square_field("zero", [](double, double) { return 0.0; });
  const auto e = expected_l1_error(cache(), zero, [](double, double) { return 0.0; }, Derivative::dx1dx2, 10,
                                   GridSpec(16), 8, 1);
  EXPECT_EQ(e.mean, 0.0);
  EXPECT_EQ(e.std_error, 0.0);
}

TEST(ExpectedL1Error, BilinearMixedDerivativeIsExact) {
  const auto prod = plane_field("prod", [](double x1, double x2) { return x1 * x2; });
  const auto e = expected_l1_error(cache(), prod, [](double, double) { return 1.0; }, Derivative::dx1dx2, 24,
                                   GridSpec(32), 6, 3);
  EXPECT_LT(e.mean, 1e-10);
}

TEST(ExpectedL1Error, RejectsTooFewSamples) {
  const auto one = square_field("one", [](double, double) { return 1.0; });
  EXPECT_THROW((void)expected_l1_error(cache(), one, one.function(), Derivative::value, 4, GridSpec(16), 1, 0),
               ConfigError);
}

TEST(ExpectedL1Error, IndependentOfThreadCount) {
  const auto f = square_field("f", [](double x1, double x2) { return std::cos(7.0 * x1 * x2); });
  const PlaneFunction ref = [](double x1, double x2) { return -7.0 * x2 * std::sin(7.0 * x1 * x2); };
  const GridSpec grid(24);
  const auto serial = expected_l1_error(cache(), f, ref, Derivative::dx1, 20, grid, 16, 99, {1});
  for (unsigned threads : {2u, 4u, 7u, 0u}) {
    const auto parallel = expected_l1_error(cache(), f, ref, Derivative::dx1, 20, grid, 16, 99, {threads});
    EXPECT_EQ(serial.mean, parallel.mean) << threads;
    EXPECT_EQ(serial.std_error, parallel.std_error) << threads;
  }
}

TEST(ExpectedL1Error, BoundaryVanishingFieldConvergesAtFirstOrder) {
  // Zero extension is continuous here, so no boundary floor: error ~ 1/n.
  const double pi = std::numbers::pi;
  const auto f = square_field("sinsin", [pi](double x1, double x2) { return std::sin(pi * x1) * std::sin(pi * x2); });
  const PlaneFunction d12 = [pi](double x1, double x2) { return pi * pi * std::cos(pi * x1) * std::cos(pi * x2); };
  const GridSpec grid(64);
  const auto coarse = expected_l1_error(cache(), f, d12, Derivative::dx1dx2, 12, grid, 8, 7);
  const auto fine = expected_l1_error(cache(), f, d12, Derivative::dx1dx2, 96, grid, 8, 7);
  EXPECT_LT(fine.mean, 0.2 * coarse.mean);
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
  try {
    parallel_for(100, {4}, [](std::size_t i) {
      if (i % 10 == 7) {
        throw NumericError("task " + std::to_string(i));
      }
    });
    FAIL() << "expected an exception";
  } catch (const NumericError& e) {
    EXPECT_STREQ(e.what(), "task 7");
  }
}

}  // namespace
}  // namespace stancu
