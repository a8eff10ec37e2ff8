#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "invmetrics/hartogs.hpp"

using namespace invmetrics;
using namespace invmetrics::hartogs;

namespace {

constexpr double kZetaPrime2 = -0.93754825431584375;
constexpr double kExpZetaPrime2 = 0.39158673047111855;

// Dyadic points of the open unit disc, level by level, skipping points already
// present on a coarser lattice; row-major within a level.
std::vector<std::pair<long long, int>> dyadic_numerators(std::size_t count, std::vector<Complex>& out) {
  std::vector<std::pair<long long, int>> levels;
  for (int m = 1; out.size() < count; ++m) {
    const long long side = 1LL << m;
    for (long long i = -side + 1; i < side; ++i)
      for (long long j = -side + 1; j < side; ++j) {
        if ((i & 1) == 0 && (j & 1) == 0) continue;
        if (i * i + j * j >= side * side) continue;
        out.emplace_back(std::ldexp(static_cast<double>(i), -m), std::ldexp(static_cast<double>(j), -m));
        levels.push_back({i, m});
      }
  }
  out.resize(count);
  return levels;
}

long double exam1_direct(Complex xi, Complex eta, std::size_t terms) {
  std::vector<Complex> a;
  dyadic_numerators(terms, a);
  long double s = 0;
  for (std::size_t k = 1; k <= terms; ++k) {
    const long double q = std::norm(xi - a[k - 1]) + std::abs(eta);
    s += std::ldexp(std::log(q / static_cast<long double>(k)), -static_cast<int>(k));
  }
  return s;
}

long double exam3_direct(Complex lambda, long long K) {
  long double s = 0;
  for (long long j = K; j >= 2; --j) {
    const long double d = std::abs(lambda - Complex(1.0 / static_cast<double>(j)));
    s += std::log(d) / (static_cast<long double>(j) * j);
  }
  return s;
}

}  // namespace

TEST(DenseSequence, MatchesIndependentEnumeration) {
  std::vector<Complex> expected;
  dyadic_numerators(5000, expected);
  const auto got = dense_sequence(5000);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k], expected[k]);
}

TEST(DenseSequence, DistinctInsideDiscAndNotTooSmall) {
  const auto seq = dense_sequence(3000);
  std::set<std::pair<double, double>> seen;
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    const Complex a = seq[k - 1];
    EXPECT_LT(std::abs(a), 1.0);
    EXPECT_GE(std::abs(a), std::ldexp(1.0, -static_cast<int>(k)));
    EXPECT_TRUE(seen.insert({a.real(), a.imag()}).second);
  }
}

TEST(Exam1Phi, OriginCertified) {
  const PhiValue v = phi_eval(Exam1Series{}, {0.0, 0.0});
  EXPECT_TRUE(std::isfinite(v.value));
  EXPECT_LE(v.certified_error, 1e-8);
  const long double direct = exam1_direct(0.0, 0.0, 120);
  EXPECT_LE(std::abs(static_cast<double>(direct) - v.value), v.certified_error + 1e-15);
}

TEST(Exam1Phi, OffAxisAgainstDirectSum) {
  const Complex pts[][2] = {{0.0, 0.1}, {Complex(0.3, 0.2), 0.05}, {0.7, Complex(0, 0.3)}};
  for (const auto& p : pts) {
    const PhiValue v = phi_eval(Exam1Series{}, {p[0], p[1]});
    const long double direct = exam1_direct(p[0], p[1], 120);
    EXPECT_LE(std::abs(static_cast<double>(direct) - v.value), v.certified_error + 1e-15);
  }
}

TEST(Exam1Phi, PolesAreSingular) {
  try {
    phi_eval(Exam1Series{}, {0.5, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularPoint);
  }
}

TEST(Exam3Phi, PartialSumsAtOrigin) {
  for (int k : {2, 3, 10, 100, 1000}) {
    const PhiValue v = phi_eval(Exam3Series{k}, {0.0});
    EXPECT_NEAR(v.value, static_cast<double>(exam3_direct(0.0, k)), v.certified_error + 1e-15);
    EXPECT_LE(v.certified_error, 1e-13);
  }
}

TEST(Exam3Phi, FullSeriesIsZetaPrime) {
  const PhiValue v = phi_eval(Exam3Series{}, {0.0});
  EXPECT_NEAR(v.value, kZetaPrime2, std::max(v.certified_error, 1e-12));
  EXPECT_LE(v.certified_error, 1e-6);
  EXPECT_NEAR(std::exp(v.value), kExpZetaPrime2, 1e-12);
}

TEST(Exam3Phi, TruncationsAgreeWithLongDirectSum) {
  const Complex lambdas[] = {0.0, Complex(0.1, 0.05), Complex(-0.3, 0.2)};
  for (const Complex l : lambdas) {
    // Remaining tail of the direct sum beyond N behaves like log|lambda| / N.
    const long long N = 1000000;
    const double tail = l == 0.0 ? -(std::log(N + 0.5) + 1.0) / (N + 0.5) : std::log(std::abs(l)) / N;
    const double reference = static_cast<double>(exam3_direct(l, N)) + tail;
    for (std::size_t K : {10u, 100u, 1000u}) {
      const PhiValue v = phi_eval(Exam3Series{std::nullopt, K}, {l});
      EXPECT_LE(std::abs(v.value - reference), v.certified_error + 2e-8) << "K=" << K << " l=" << l;
    }
  }
}

TEST(Exam3Phi, PartialSumsDecreaseTowardLimit) {
  double prev = phi_eval(Exam3Series{2}, {0.0}).value;
  for (int k = 3; k <= 200; ++k) {
    const double v = phi_eval(Exam3Series{k}, {0.0}).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_GT(prev, kZetaPrime2);
}

TEST(Exam3Phi, RegionChecks) {
  EXPECT_THROW(phi_eval(Exam3Series{}, {0.5}), Error);
  EXPECT_THROW(phi_eval(Exam3Series{1}, {0.0}), Error);
}

TEST(HartogsDomain, Membership) {
  const auto g = HartogsDomain::exam3();
  EXPECT_EQ(membership(g, {0.0, 0.0}), Membership::Inside);
  EXPECT_EQ(membership(g, {0.0, 0.3}), Membership::Inside);
  EXPECT_EQ(membership(g, {0.0, 3.0}), Membership::Outside);
  EXPECT_EQ(membership(g, {0.6, 0.0}), Membership::Outside);
  const auto e1 = HartogsDomain::exam1();
  EXPECT_EQ(membership(e1, {0.1, 0.0, 0.0}), Membership::Inside);
  EXPECT_EQ(membership(e1, {100.0, 0.0, 0.5}), Membership::Outside);
}

TEST(HartogsCandidates, IncreasingFamilyBoundsExceedGap) {
  for (double z2 : {0.05, 0.1, 0.2}) {
    const auto rows = increasing_family_table(60, z2, 2);
    double prev = INFINITY;
    for (const auto& r : rows) {
      EXPECT_LT(r.exp_phi_k0, prev);
      prev = r.exp_phi_k0;
      EXPECT_GE(r.lower_bound, z2 * std::exp(kZetaPrime2) - 1e-12);
      EXPECT_EQ(r.proven_g_value, 0.0);
      EXPECT_GE(r.lower_bound - r.proven_g_value, 0.39 * z2);
    }
  }
}

TEST(HartogsCandidates, CandidateIsLogPshShapeOnFiber) {
  const auto g = HartogsDomain::exam3(5);
  const auto c = make_candidate(g, {0.0, 0.0}, MetricKind::sibony_function(), 0.1);
  const double a = c({0.0, 0.2}), b = c({0.0, 0.4});
  EXPECT_NEAR(b / a, std::pow(2.0, 1.0 + 0.1 / 2), 1e-12);
}

TEST(HartogsProven, Whitelist) {
  const auto e1 = HartogsDomain::exam1();
  const MetricValue gamma = proven_value(e1, MetricKind::caratheodory(), {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
  EXPECT_EQ(gamma.status, ValueStatus::ProvenExact);
  EXPECT_EQ(gamma.value(), 0.0);
  EXPECT_FALSE(gamma.citation.empty());
  const double t = 0.25;
  const MetricValue a = proven_value(e1, MetricKind::azukawa(), {0.0, 0.0, t}, {1.0, 0.0, 0.0});
  const PhiValue phi = phi_eval(Exam1Series{}, {0.0, t});
  EXPECT_NEAR(a.value(), std::exp(phi.value), std::exp(phi.value) * std::expm1(phi.certified_error) + 1e-15);
  const double lb = candidate_lower_bound(e1, {0.0, 0.0, t}, MetricKind::sibony_metric(), {1.0, 0.0, 0.0});
  EXPECT_LE(lb, a.upper + 1e-15);
  EXPECT_GE(lb, a.lower - 2 * a.error - 1e-15);
  try {
    proven_value(e1, MetricKind::green(), {0.0, 0.0, 0.0}, {0.1, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotProven);
  }
}
