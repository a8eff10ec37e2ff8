#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "invmetrics/numerics.hpp"

using namespace invmetrics;
using namespace invmetrics::numerics;

namespace {

// f(z) = c * z_1^b_1 * z_2^b_2
struct Monomial2 {
  Complex c;
  int b1, b2;
  Complex operator()(const ComplexVector& z) const { return c * ipow(z[0], b1) * ipow(z[1], b2); }
  Complex derivative(const ComplexVector& a, const ComplexVector& x) const {
    Complex d = 0;
    if (b1 > 0) d += c * static_cast<double>(b1) * ipow(a[0], b1 - 1) * ipow(a[1], b2) * x[0];
    if (b2 > 0) d += c * static_cast<double>(b2) * ipow(a[0], b1) * ipow(a[1], b2 - 1) * x[1];
    return d;
  }
};

}  // namespace

TEST(Limsup, LinearQuotient) {
  CurveSampler c;
  c.evaluator = [](Complex l) { return 3.0 * std::abs(l) + std::norm(l); };
  const auto r = limsup_quotient(c);
  EXPECT_EQ(r.trend, Trend::Stable);
  EXPECT_NEAR(r.estimate, 3.0, 1e-8);
}

TEST(Limsup, AngularMaximum) {
  CurveSampler c;
  c.evaluator = [](Complex l) { return std::abs(l) * (2.0 + std::cos(std::arg(l))); };
  EXPECT_NEAR(limsup_quotient(c).estimate, 3.0, 1e-8);
}

TEST(Limsup, DivergentQuotientIsNoConvergence) {
  CurveSampler c;
  c.evaluator = [](Complex l) { return std::sqrt(std::abs(l)); };
  try {
    limsup_quotient(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
  }
  EXPECT_EQ(limsup_quotient_unchecked(c).trend, Trend::Increasing);
}

TEST(Limsup, MembershipAndFiniteness) {
  CurveSampler c;
  c.evaluator = [](Complex l) { return std::abs(l); };
  c.membership = [](Complex l) { return l.real() > 0; };
  EXPECT_THROW(limsup_quotient(c), Error);
  CurveSampler n;
  n.evaluator = [](Complex) { return std::nan(""); };
  EXPECT_THROW(limsup_quotient(n), Error);
  CurveSampler bad;
  bad.evaluator = [](Complex l) { return std::abs(l); };
  bad.rho = 1.5;
  EXPECT_THROW(limsup_quotient(bad), Error);
}

TEST(Levi, IdentityForMonomials) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::uniform_int_distribution<int> e(0, 3);
  int tested = 0;
  while (tested < 25) {
    const Monomial2 f{Complex(u(rng), u(rng)) + 1.0, e(rng), e(rng)};
    if (f.b1 + f.b2 == 0) continue;
    const ComplexVector a{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const ComplexVector x{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    const double expected = std::norm(f.derivative(a, x));
    if (expected < 1e-3) continue;
    const auto u2 = [&](const ComplexVector& z) { return std::norm(f(z)); };
    EXPECT_NEAR(levi_form(u2, a, x), expected, 1e-6 * expected);
    ++tested;
  }
}

TEST(Levi, SecondOrderConvergence) {
  const Monomial2 f{1.0, 3, 2};
  const ComplexVector a{Complex(0.4, 0.1), Complex(-0.3, 0.5)}, x{1.0, Complex(0, 1)};
  const double exact = std::norm(f.derivative(a, x));
  const auto u2 = [&](const ComplexVector& z) { return std::norm(f(z)); };
  const double e1 = std::abs(levi_form(u2, a, x, {1e-2}) - exact);
  const double e2 = std::abs(levi_form(u2, a, x, {5e-3}) - exact);
  EXPECT_GE(std::log2(e1 / e2), 1.8);
}

TEST(Levi, TotalCancellationIsStepTooSmall) {
  const auto u = [](const ComplexVector& z) { return (z[0] * z[1]).real() + 2 * z[0].imag(); };
  try {
    levi_form(u, {0.2, 0.3}, {1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepTooSmall);
  }
}

TEST(Levi, Linearity) {
  const auto u = [](const ComplexVector& z) { return std::norm(z[0] * z[0] * z[1]); };
  const ComplexVector a{0.3, Complex(0.2, 0.4)}, x{1.0, Complex(0.5, -1)};
  const Complex lambda(0.7, -1.2);
  const double base = levi_form(u, a, x);
  EXPECT_NEAR(levi_form(u, a, x * lambda), std::norm(lambda) * base, 1e-6 * std::norm(lambda) * base);
}

TEST(Vanishing, OrderAndCoefficient) {
  const auto u = [](const ComplexVector& z) { return std::pow(std::abs(z[0] * z[1]), 1.5); };
  const ComplexVector a{0.0, 0.0}, x{1.0, 2.0};
  EXPECT_EQ(order_of_vanishing(u, a, x), 3.0);
  EXPECT_NEAR(taylor_p_coefficient(u, a, x, 3), std::pow(2.0, 1.5), 1e-6);
  EXPECT_THROW(taylor_p_coefficient(u, a, x, 2), Error);
}

TEST(Vanishing, UndeterminedOnSignChange) {
  const auto u = [](const ComplexVector& z) { return z[0].real(); };
  EXPECT_THROW(order_of_vanishing(u, {0.0}, {-1.0}), Error);
}
