#include "stancu/corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "stancu/errors.hpp"
#include "support.hpp"

namespace stancu {
namespace {

TEST(Corpus, NamedEntries) {
  ASSERT_GE(corpus().size(), 5u);
  for (const char* name : {"poly", "trig", "osc", "ridge", "kink"}) {
    EXPECT_EQ(corpus_entry(name).name(), name);
  }
  EXPECT_THROW((void)corpus_entry("gauss"), ConfigError);
}

TEST(Corpus, TagsImplyPartials) {
  for (const auto& e : corpus()) {
    if (e.has_tag(ClassTag::c2_smooth)) {
      EXPECT_TRUE(e.field.has(Derivative::dx1) && e.field.has(Derivative::dx2) && e.field.has(Derivative::dx1dx2))
          << e.name();
    }
    if (e.has_tag(ClassTag::discontinuous_mixed_derivative)) {
      EXPECT_TRUE(e.field.has(Derivative::dx2) && e.field.has(Derivative::dx1dx2)) << e.name();
    }
  }
}

TEST(Corpus, HypothesisClasses) {
  EXPECT_TRUE(corpus_entry("osc").satisfies(Derivative::dx1dx2));
  EXPECT_TRUE(corpus_entry("ridge").satisfies(Derivative::dx1));
  EXPECT_FALSE(corpus_entry("kink").satisfies(Derivative::dx1dx2));
  EXPECT_TRUE(corpus_entry("kink").has_tag(ClassTag::beyond_hypothesis));
  EXPECT_EQ(to_string(ClassTag::c2_smooth), "C2-smooth");
}

TEST(Corpus, SingularPointValues) {
  const auto& osc = corpus_entry("osc").field;
  EXPECT_EQ(osc.eval(0.5, 0.5), 0.0);
  EXPECT_EQ(osc.partial(Derivative::dx1dx2, 0.5, 0.5), 0.0);
  EXPECT_EQ(corpus_entry("kink").field.partial(Derivative::dx1dx2, 0.25, 0.25), 1.0);
  EXPECT_EQ(corpus_entry("kink").field.partial(Derivative::dx1dx2, 0.75, 0.25), -1.0);
}

TEST(Corpus, OscillatingFactorDerivativeAtCentreIsTheDifferenceQuotientLimit) {
  for (double h : {1e-2, 1e-4, 1e-6}) {
    EXPECT_LE(std::abs(oscillating_factor(0.5 + h) / h), h);
  }
  EXPECT_EQ(oscillating_factor_derivative(0.5), 0.0);
}

TEST(Corpus, BoundedOnTheSquare) {
  const int m = 401;
  for (const auto& e : corpus()) {
    EXPECT_LE(e.sup_bound, 2.0);
    double sup = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        sup = std::max(sup, std::abs(e.field.eval(i / (m - 1.0), j / (m - 1.0))));
      }
    }
    EXPECT_LE(sup, e.sup_bound + 1e-15) << e.name();
  }
}

TEST(Corpus, ZeroOutsideTheSquare) {
  for (const auto& e : corpus()) {
    EXPECT_EQ(e.field.eval(1.5, 0.5), 0.0) << e.name();
    EXPECT_EQ(e.field.eval(0.5, -0.01), 0.0) << e.name();
    EXPECT_EQ(e.field.partial(Derivative::dx1, 1.5, 0.5), 0.0) << e.name();
  }
}

TEST(Corpus, AnalyticPartialsMatchFiniteDifferences) {
  // Step shrinks near singular lines, where g' varies on a scale of u^2.
  testing::Uniform u(77);
  for (const auto& e : corpus()) {
    const PlaneFunction f = e.field.function();
    const PlaneFunction f2 = e.field.function(Derivative::dx2);
    int checked = 0;
    while (checked < 1000) {
      const double x1 = u(0.01, 0.99);
      const double x2 = u(0.01, 0.99);
      const double d = e.distance_to_singular(x1, x2);
      if (d < 1e-3) {
        continue;
      }
      const double h = std::min(1e-6, 1e-2 * d * d);
      ++checked;
      ASSERT_NEAR(e.field.partial(Derivative::dx1, x1, x2), testing::central_x1(f, x1, x2, h), 1e-4)
          << e.name() << " dx1 at " << x1 << ", " << x2;
      ASSERT_NEAR(e.field.partial(Derivative::dx2, x1, x2), testing::central_x2(f, x1, x2, h), 1e-4)
          << e.name() << " dx2 at " << x1 << ", " << x2;
      ASSERT_NEAR(e.field.partial(Derivative::dx1dx2, x1, x2), testing::central_x1(f2, x1, x2, h), 1e-4)
          << e.name() << " dx1dx2 at " << x1 << ", " << x2;
    }
  }
}

TEST(Field, ParsesDerivativeNames) {
  for (auto w : {Derivative::value, Derivative::dx1, Derivative::dx2, Derivative::dx1dx2}) {
    EXPECT_EQ(parse_derivative(to_string(w)), w);
  }
  EXPECT_FALSE(parse_derivative("dx2dx1").has_value());
}

TEST(Field, MissingPartialAndValueSlot) {
  ScalarField2 f("f", [](double x1, double) { return x1; });
  EXPECT_FALSE(f.has(Derivative::dx1));
  EXPECT_THROW((void)f.partial(Derivative::dx1, 0.5, 0.5), ConfigError);
  EXPECT_THROW(f.with(Derivative::value, [](double, double) { return 0.0; }), ConfigError);
}

}  // namespace
}  // namespace stancu
