#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "invmetrics/foundations.hpp"

using namespace invmetrics;

namespace {

ComplexVector random_vector(std::mt19937_64& rng, std::size_t n, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Complex> e(n);
  for (auto& z : e) z = {u(rng), u(rng)};
  return ComplexVector(e);
}

double max_diff(const ComplexVector& a, const ComplexVector& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace

TEST(MetricValue, ExactRejectsNegativeAndNonFinite) {
  EXPECT_EQ(metric_value_exact(0.0).lower, 0.0);
  const MetricValue v = metric_value_exact(0.4);
  EXPECT_EQ(v.lower, 0.4);
  EXPECT_EQ(v.upper, 0.4);
  EXPECT_EQ(v.status, ValueStatus::Exact);
  EXPECT_TRUE(v.is_exact());
  try {
    metric_value_exact(-1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidValue);
  }
  EXPECT_THROW(metric_value_exact(std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_THROW(metric_value_exact(std::numeric_limits<double>::infinity()), Error);
}

TEST(MetricValue, IntersectNarrowsAndStaysConsistent) {
  const MetricValue a = metric_value_bounds(0.1, 0.8);
  const MetricValue b = metric_value_bounds(0.3, 1.2);
  const MetricValue c = intersect(a, b);
  EXPECT_DOUBLE_EQ(c.lower, 0.3);
  EXPECT_DOUBLE_EQ(c.upper, 0.8);
  EXPECT_TRUE(is_consistent(c));
  const MetricValue d = intersect(a, metric_value_exact(0.5));
  EXPECT_TRUE(d.is_exact());
  EXPECT_DOUBLE_EQ(d.value(), 0.5);
}

TEST(MetricValue, ProvenCarriesCitation) {
  const MetricValue v = metric_value_proven(0.0, "reason");
  EXPECT_EQ(v.status, ValueStatus::ProvenExact);
  EXPECT_EQ(v.citation, "reason");
}

TEST(MetricKind, NamesAndOrders) {
  EXPECT_EQ(MetricKind::sibony_function().name(), "sibony");
  EXPECT_EQ(MetricKind::sibony_function(3).order(), 3);
  EXPECT_TRUE(MetricKind::green().is_function());
  EXPECT_TRUE(MetricKind::azukawa().is_metric());
  EXPECT_TRUE(MetricKind::sibony_metric(5).is_metric());
  EXPECT_THROW(MetricKind::sibony_function(0), Error);
  EXPECT_THROW(MetricKind::sibony_metric(0), Error);
}

TEST(Maps, MonomialExample) {
  const MonomialMap f{{1.0}, {{1, 1}}};
  const ComplexVector w = apply_map(f, {0.5, 0.5});
  ASSERT_EQ(w.dim(), 1u);
  EXPECT_DOUBLE_EQ(w[0].real(), 0.25);
}

TEST(Maps, EmbeddingAndProjection) {
  const CoordinateEmbedding e{3, {{2, 0.0}}};
  const ComplexVector w = apply_map(e, {Complex(0.3, 0.1), 0.0});
  EXPECT_EQ(w, ComplexVector({Complex(0.3, 0.1), 0.0, 0.0}));
  const Projection p{{2}};
  EXPECT_EQ(apply_map(p, {1.0, 2.0, 0.7}), ComplexVector({0.7}));
}

TEST(Maps, NegativeExponentAtZeroIsDomainViolation) {
  const MonomialMap f{{1.0}, {{-1, 1}}};
  try {
    apply_map(f, {0.0, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
  }
}

TEST(Maps, DimensionMismatch) {
  const MonomialMap f{{1.0}, {{1, 1}}};
  try {
    apply_map(f, {0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Maps, CompositionProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialMap inner, outer;
    for (int i = 0; i < 3; ++i) {
      inner.coeffs.push_back({c(rng), c(rng)});
      inner.exponents.push_back({ex(rng), ex(rng)});
    }
    for (int i = 0; i < 2; ++i) {
      outer.coeffs.push_back({c(rng), c(rng)});
      outer.exponents.push_back({ex(rng), ex(rng), ex(rng)});
    }
    const ComplexVector z = random_vector(rng, 2, 0.9);
    const ComplexVector direct = apply_map(compose(outer, inner), z);
    const ComplexVector nested = apply_map(outer, apply_map(inner, z));
    double scale = 1;
    for (std::size_t j = 0; j < nested.dim(); ++j) scale = std::max(scale, std::abs(nested[j]));
    EXPECT_LE(max_diff(direct, nested), 1e-12 * scale);
  }
}

TEST(Maps, DifferentialMatchesDifferenceQuotient) {
  std::mt19937_64 rng(11);
  const MonomialMap f{{1.0, Complex(0, 2)}, {{2, 1}, {0, 3}}};
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector a = random_vector(rng, 2, 0.8);
    const ComplexVector x = random_vector(rng, 2, 1.0);
    const double h = 1e-6;
    const ComplexVector fd = (apply_map(f, a + x * h) - apply_map(f, a - x * h)) * (1.0 / (2 * h));
    EXPECT_LE(max_diff(map_differential(f, a, x), fd), 1e-8);
  }
}

TEST(Maps, AffineCurve) {
  Curve c;
  c.shape = Curve::Shape::Affine;
  c.point = {0.1, 0.2};
  c.direction = {1.0, -1.0};
  EXPECT_LE(max_diff(apply_map(c, {0.5}), ComplexVector({0.6, -0.3})), 1e-15);
  EXPECT_EQ(source_dim(c), 1u);
  EXPECT_EQ(target_dim(c), 2u);
}

TEST(Numerics, IpowMatchesStdPow) {
  const Complex z(0.3, -0.7);
  for (int k = -5; k <= 7; ++k) EXPECT_LE(std::abs(ipow(z, k) - std::pow(z, k)), 1e-13);
}

TEST(Numerics, CompensatedSumRecoversCancellation) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-13, 1e-20);
}
