#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "invmetrics/numerics.hpp"
#include "invmetrics/reinhardt.hpp"

using namespace invmetrics;
using namespace invmetrics::reinhardt;

namespace {

ExponentVector ints(std::vector<double> a) { return {std::move(a), ArithmeticClass::RelPrimeIntegers}; }
ExponentVector generic(std::vector<double> a) { return {std::move(a), ArithmeticClass::NotInRZn}; }

// q = u/v equals (2p - k)/k iff k = 2pv/(u + v), so u + v must divide 2pv.
bool excluded_by_divisibility(int u, int v, int p) { return (2 * p * v) % (u + v) == 0; }

// Direct enumeration of {(2p - k)/k : k >= 1} against q = u/v.
bool excluded_by_enumeration(int u, int v, int p) {
  for (int k = 1; k < 2 * p; ++k)
    if (static_cast<long>(2 * p - k) * v == static_cast<long>(u) * k) return true;
  return false;
}

}  // namespace

TEST(ExponentVector, ClassValidation) {
  EXPECT_NO_THROW(ints({1, 2, 2}));
  EXPECT_THROW(ints({2, 4}), Error);
  EXPECT_THROW(ints({1.5, 1}), Error);
  EXPECT_NO_THROW(generic({std::sqrt(2.0), 1}));
  EXPECT_THROW(generic({1, 2}), Error);
  EXPECT_THROW(ints({0, 1}), Error);
}

TEST(Reinhardt, Containment) {
  const auto a = ints({1, 2, 2});
  EXPECT_TRUE(contains(a, {0.5, 0.5, 0.5}));
  EXPECT_FALSE(contains(a, {2.0, 0.9, 0.9}));
  const auto neg = ints({-1, 2});
  EXPECT_FALSE(contains(neg, {0.0, 0.1}));
  EXPECT_TRUE(contains(neg, {0.5, 0.5}));
}

TEST(Reinhardt, ClassifyCountsZeroCoordinates) {
  const auto a = ints({1, 2, 2});
  EXPECT_EQ(classify(a, {0.0, 0.0, 0.0}).sigma, 3u);
  EXPECT_EQ(classify(a, {1.0 / 3, 0.0, 0.0}).sigma, 2u);
  EXPECT_EQ(classify(a, {0.1, 0.2, 0.3}).sigma, 0u);
}

TEST(Reinhardt, GreenAndSibonyClosedForms) {
  const auto a = ints({1, 2, 2});
  const ComplexVector z{0.5, 0.5, 0.5};
  const double za = 0.5 * 0.25 * 0.25;
  EXPECT_NEAR(eval_function(a, MetricKind::green(), {0.0, 0.0, 0.0}, z).value(), std::pow(za, 1.0 / 5),
              1e-12);
  EXPECT_NEAR(eval_function(a, MetricKind::sibony_function(), {0.0, 0.0, 0.0}, z).value(), za, 1e-12);
  for (int k = 1; k <= 100; ++k) {
    const ComplexVector ak{1.0 / k, 0.0, 0.0};
    EXPECT_NEAR(eval_function(a, MetricKind::sibony_function(), ak, z).value(), std::sqrt(za), 1e-12);
  }
}

TEST(Reinhardt, GreenAtOriginWithUnitExponents) {
  const auto a = ints({1, 2, 2});
  const MetricValue g = eval_function(a, MetricKind::green(), {0.0, 0.0, 0.0}, {0.5, 0.5, 0.5});
  EXPECT_TRUE(g.is_exact());
}

TEST(Reinhardt, ChainHoldsOnSamples) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const std::vector<ExponentVector> alphas{ints({1, 2, 2}), ints({2, 3}), ints({1, 1}),
                                           generic({std::sqrt(2.0), 1})};
  for (const auto& alpha : alphas) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Complex> av(alpha.dim()), zv(alpha.dim());
      for (std::size_t j = 0; j < alpha.dim(); ++j) {
        av[j] = i % 3 == 0 && j == 0 ? Complex(0) : Complex(u(rng), u(rng));
        zv[j] = {u(rng), u(rng)};
      }
      const ComplexVector a(av), z(zv);
      if (!contains(alpha, a) || !contains(alpha, z)) continue;
      const double m = eval_function(alpha, MetricKind::mobius(), a, z).upper;
      const auto s = eval_function(alpha, MetricKind::sibony_function(), a, z);
      const double g = eval_function(alpha, MetricKind::green(), a, z).lower;
      EXPECT_LE(m, s.upper + 1e-12);
      EXPECT_LE(s.lower, g + 1e-12);
    }
  }
}

TEST(Reinhardt, AzukawaMatchesGreenLimsupOracle) {
  const auto alpha = ints({1, 1});
  const ComplexVector a{0.0, 0.0}, x{1.0, 2.0};
  const auto green = [&](const ComplexVector& z) {
    return eval_function(alpha, MetricKind::green(), a, z).value();
  };
  const auto r = numerics::limsup_quotient(numerics::along_line(green, a, x));
  EXPECT_NEAR(r.estimate, std::sqrt(2.0), 0.02 * std::sqrt(2.0));
  EXPECT_NEAR(eval_metric(alpha, MetricKind::azukawa(), a, x).value(), std::sqrt(2.0), 1e-12);
}

TEST(Reinhardt, AzukawaOracleAwayFromAxes) {
  const auto alpha = ints({2, 3});
  const ComplexVector a{0.3, Complex(0.1, 0.2)}, x{Complex(0.5, -1), 0.7};
  const auto green = [&](const ComplexVector& z) {
    return eval_function(alpha, MetricKind::green(), a, z).value();
  };
  const double expected = eval_metric(alpha, MetricKind::azukawa(), a, x).value();
  const auto r = numerics::limsup_quotient(numerics::along_line(green, a, x));
  EXPECT_NEAR(r.estimate, expected, 0.02 * expected);
}

TEST(Reinhardt, HigherOrderClassification) {
  const ComplexVector o{0.0, 0.0}, x{Complex(0.6, 0.2), 1.3};
  const double expected = std::sqrt(std::abs(x[0] * x[1]));
  const MetricValue s4 = eval_metric(ints({1, 1}), MetricKind::sibony_metric(4), o, x);
  EXPECT_TRUE(s4.is_exact());
  EXPECT_NEAR(s4.value(), expected, 1e-15);
  const MetricValue s2 = eval_metric(ints({3, 1}), MetricKind::sibony_metric(2), o, x);
  EXPECT_TRUE(s2.is_exact());
  EXPECT_EQ(s2.value(), 0.0);
  const MetricValue s6 = eval_metric(ints({1, 1}), MetricKind::sibony_metric(6), o, x);
  EXPECT_EQ(s6.status, ValueStatus::Unknown);
  EXPECT_EQ(s6.lower, 0.0);
  EXPECT_NEAR(s6.upper, expected, 1e-15);
}

TEST(Reinhardt, OddMetricOrderRejected) {
  try {
    eval_metric(ints({1, 1}), MetricKind::sibony_metric(3), {0.0, 0.0}, {1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidOrder);
  }
}

TEST(Reinhardt, ExclusionSetMatchesEnumeration) {
  for (int p = 1; p <= 5; ++p)
    for (int u = 1; u <= 20; ++u)
      for (int v = 1; v <= 20; ++v) {
        if (std::gcd(u, v) != 1) continue;
        const bool expected = excluded_by_enumeration(u, v, p);
        EXPECT_EQ(expected, excluded_by_divisibility(u, v, p)) << u << "/" << v << " p=" << p;
        EXPECT_EQ(in_exclusion_set(Rational(u, v), p), expected) << u << "/" << v << " p=" << p;
      }
}

TEST(Reinhardt, TaylorCoefficientHasNoFactorialFactor) {
  const auto alpha = ints({1, 1});
  const auto t = taylor_lowest_coefficient(alpha, {0.0, 0.0}, {1.0, 2.0});
  EXPECT_NEAR(std::abs(t.coefficient), 2.0, 1e-15);
  EXPECT_EQ(t.order, 2.0);
}

TEST(Reinhardt, RotationInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-0.6, 0.6), th(0, 2 * M_PI);
  const auto alpha = ints({1, 2, 2});
  for (int i = 0; i < 100; ++i) {
    const ComplexVector a{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), 0.0};
    const ComplexVector z{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const ComplexVector rot{std::polar(1.0, th(rng)), std::polar(1.0, th(rng)), std::polar(1.0, th(rng))};
    for (const auto& kind : {MetricKind::green(), MetricKind::sibony_function(), MetricKind::mobius()}) {
      const auto v1 = eval_function(alpha, kind, a, z);
      const auto v2 = eval_function(alpha, kind, a.hadamard(rot), z.hadamard(rot));
      EXPECT_NEAR(v1.lower, v2.lower, 1e-12);
      EXPECT_NEAR(v1.upper, v2.upper, 1e-12);
    }
  }
}
