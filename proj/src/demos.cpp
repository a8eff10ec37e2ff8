#include "invmetrics/demos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "invmetrics/balanced.hpp"
#include "invmetrics/hartogs.hpp"
#include "invmetrics/reinhardt.hpp"

namespace invmetrics::demos {

namespace {

using reinhardt::ArithmeticClass;
using reinhardt::ExponentVector;

std::vector<std::string> row(std::initializer_list<double> values) {
  std::vector<std::string> out;
  for (double v : values) out.push_back(format_number(v));
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"nonusc",  "regularization", "increasing",
                                                 "chain",   "balanced",       "hartogs-gap"};
  return names;
}

Table run_demo(const std::string& name) {
  if (name == "nonusc") return nonusc();
  if (name == "regularization") return regularization();
  if (name == "increasing") return increasing();
  if (name == "chain") return chain();
  if (name == "balanced") return balanced();
  if (name == "hartogs-gap") return hartogs_gap();
  throw Error(ErrorKind::InvalidInput, "unknown demo '" + name + "'");
}

// s(0, z) = |z^alpha| on D_(1,2,2) while s((1/k,0,0), z) = |z^alpha|^(1/2)
// for every k, so s(., z) is not upper semicontinuous at 0.
Table nonusc() {
  Table t;
  t.columns = {"k", "a1", "z_alpha", "s_at_origin", "s_at_ak", "ratio", "expected_ratio"};
  const ExponentVector alpha({1, 2, 2}, ArithmeticClass::RelPrimeIntegers);
  const ComplexVector z{0.5, 0.5, 0.5};
  const double mod = reinhardt::monomial_modulus(alpha, z);
  const MetricKind s = MetricKind::sibony_function(2);
  const double s0 = reinhardt::eval_function(alpha, s, ComplexVector{0.0, 0.0, 0.0}, z).value();
  const double expected = 1.0 / std::sqrt(mod);
  t.holds = true;
  for (int k = 1; k <= 100; ++k) {
    const double sk = reinhardt::eval_function(alpha, s, ComplexVector{1.0 / k, 0.0, 0.0}, z).value();
    const double ratio = sk / s0;
    t.rows.push_back(row({double(k), 1.0 / k, mod, s0, sk, ratio, expected}));
    if (!(sk > s0) || std::abs(ratio - expected) > 1e-12 * expected) t.holds = false;
  }
  t.summary = "s((1/k,0,0),z) / s(0,z) = " + format_number(expected) + " for every k";
  return t;
}

// The embedding (z1, z2) -> (z1, z2, 0) of the slice into the Exam1 domain.
// Unregularized: 0 <= 0. Upper regularized: the value at the embedded point is
// at least |b| e^{phi(0,0)} > 0 while the slice value stays 0.
Table regularization() {
  Table t;
  t.columns = {"b",           "t",           "phi_0_0", "phi_error", "embedded_value_at_origin",
               "lower_bound", "slice_value", "gap"};
  const auto G = hartogs::HartogsDomain::exam1();
  const auto D = hartogs::HartogsDomain::exam1_slice();
  const MetricKind k = MetricKind::sibony_function(2);
  const auto phi = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, 0.0});
  t.holds = true;
  for (double b : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    for (double tt : {0.1, 0.01, 0.001}) {
      const double embedded = hartogs::proven_value(G, k, ComplexVector{0.0, 0.0, 0.0}, ComplexVector{b, 0.0, 0.0}).upper;
      const double lower = hartogs::candidate_lower_bound(G, ComplexVector{0.0, 0.0, tt}, k, ComplexVector{b, 0.0, 0.0});
      const double slice = hartogs::proven_value(D, k, ComplexVector{0.0, 0.0}, ComplexVector{b, 0.0}).upper;
      t.rows.push_back(row({b, tt, phi.value, phi.certified_error, embedded, lower, slice, lower - slice}));
      if (!(embedded <= slice) || !(lower > slice)) t.holds = false;
    }
  }
  t.summary = "regularized lower bound |b| e^{phi(0,0)} exceeds the slice value 0";
  return t;
}

// G_k increase to G, yet s^(p)_{G_k}((0,0),(0,z2)) >= |z2| e^{phi(0)} while
// s^(p)_G((0,0),(0,z2)) = 0.
Table increasing() {
  Table t;
  t.columns = {"z2", "k", "phi_k_0", "exp_phi_k_0", "lower_bound", "limit_value", "proven_G_value"};
  std::vector<int> ks;
  for (int k = 2; k <= 20; ++k) ks.push_back(k);
  for (int k : {30, 50, 100, 200, 500, 1000, 2000, 5000, 10000}) ks.push_back(k);
  const auto phi0 = hartogs::phi_eval(hartogs::Exam3Series{}, ComplexVector{0.0});
  const ComplexVector origin{0.0, 0.0};
  const MetricKind s = MetricKind::sibony_function(2);
  t.holds = true;
  for (double z2 : {0.05, 0.1, 0.2}) {
    const ComplexVector target{0.0, z2};
    const double proven = hartogs::proven_value(hartogs::HartogsDomain::exam3(), s, origin, target).upper;
    const double limit = z2 * std::exp(phi0.value);
    double prev = std::numeric_limits<double>::infinity();
    for (int k : ks) {
      const auto phik = hartogs::phi_eval(hartogs::Exam3Series{k, 0}, ComplexVector{0.0});
      const double lower = hartogs::candidate_lower_bound(hartogs::HartogsDomain::exam3(k), origin, s, target);
      t.rows.push_back(row({z2, double(k), phik.value, std::exp(phik.value), lower, limit, proven}));
      if (!(std::exp(phik.value) < prev) || !(lower >= limit) || !(lower - proven >= 0.39 * z2)) t.holds = false;
      prev = std::exp(phik.value);
    }
  }
  t.summary = "e^{phi(0)} = " + format_number(std::exp(phi0.value)) + "; every G_k lower bound exceeds the G value 0";
  return t;
}

// m < s < g on D_alpha \ V_0 for integer alpha with sigma(a) >= 2, mu(a) >= 2.
Table chain() {
  Table t;
  t.columns = {"alpha", "a1", "t", "z_alpha", "mobius", "sibony", "green"};
  struct Case {
    const char* name;
    std::vector<double> alpha;
    ComplexVector a;
  };
  const std::vector<Case> cases = {
      {"2;3", {2, 3}, ComplexVector{0.0, 0.0}},
      {"1;2;2", {1, 2, 2}, ComplexVector{1.0 / 3.0, 0.0, 0.0}},
  };
  t.holds = true;
  for (const Case& c : cases) {
    const ExponentVector alpha(c.alpha, ArithmeticClass::RelPrimeIntegers);
    const auto pc = reinhardt::classify(alpha, c.a);
    if (pc.sigma < 2 || !pc.mu || *pc.mu < 2) t.holds = false;
    for (int i = 1; i <= 9; ++i) {
      const double tt = 0.1 * i;
      const ComplexVector z(std::vector<Complex>(alpha.dim(), Complex(tt, 0.0)));
      const double m = reinhardt::eval_function(alpha, MetricKind::mobius(), c.a, z).value();
      const double s = reinhardt::eval_function(alpha, MetricKind::sibony_function(2), c.a, z).value();
      const double g = reinhardt::eval_function(alpha, MetricKind::green(), c.a, z).value();
      std::vector<std::string> r = {c.name};
      for (double v : {c.a[0].real(), tt, reinhardt::monomial_modulus(alpha, z), m, s, g}) r.push_back(format_number(v));
      t.rows.push_back(std::move(r));
      if (!(m < s && s < g)) t.holds = false;
    }
  }
  t.summary = "mobius < sibony < green at every row";
  return t;
}

// gamma = S = h of the convex envelope <= A = h at the origin of balanced
// pseudoconvex domains, strict for non-convex h.
Table balanced() {
  Table t;
  t.columns = {"h", "x1", "x2", "h_value", "gamma", "sibony", "azukawa", "gap"};
  using balanced::MinkowskiSpec;
  const auto sup = std::numeric_limits<double>::infinity();
  struct Case {
    const char* name;
    MinkowskiSpec h;
    bool convex;
  };
  const std::vector<Case> cases = {
      {"monomial", MinkowskiSpec::monomial({0.5, 0.5}), false},
      {"l2-norm", MinkowskiSpec::weighted_norm({1.0, 1.0}, 2.0), true},
      {"max-of", MinkowskiSpec::max_of({MinkowskiSpec::weighted_norm({1.0, 0.0}, sup),
                                        MinkowskiSpec::weighted_norm({0.0, 1.0}, sup),
                                        MinkowskiSpec::monomial({0.5, 0.5}, 2.0)}),
       false},
  };
  std::vector<ComplexVector> dirs;
  for (int k = 0; k <= 8; ++k) {
    const double th = std::numbers::pi / 16 * k;
    dirs.push_back(ComplexVector{std::cos(th), std::sin(th)});
  }
  dirs.push_back(ComplexVector{1.0, 1.0});
  t.holds = true;
  for (const Case& c : cases) {
    bool strict_somewhere = false;
    for (const ComplexVector& x : dirs) {
      const double h = balanced::minkowski_eval(c.h, x);
      const double gamma = balanced::balanced_metrics_at_zero(c.h, true, MetricKind::caratheodory(), x).upper;
      const double sib = balanced::balanced_metrics_at_zero(c.h, true, MetricKind::sibony_metric(2), x).upper;
      const double az = balanced::balanced_metrics_at_zero(c.h, true, MetricKind::azukawa(), x).value();
      std::vector<std::string> r = {c.name};
      for (double v : {x[0].real(), x[1].real(), h, gamma, sib, az, az - gamma}) r.push_back(format_number(v));
      t.rows.push_back(std::move(r));
      if (std::abs(gamma - sib) > 1e-12 || gamma > az + 1e-9) t.holds = false;
      if (c.convex && std::abs(gamma - az) > 1e-8) t.holds = false;
      if (az - gamma > 1e-6) strict_somewhere = true;
    }
    if (!c.convex && !strict_somewhere) t.holds = false;
  }
  t.summary = "gamma = S <= A everywhere, strict somewhere for the non-convex h";
  return t;
}

// gamma((0,0,0); X0) = 0 while S^(2p)(c_t; X0) = A(c_t; X0) = e^{phi(0,t)}.
Table hartogs_gap() {
  Table t;
  t.columns = {"t",       "phi_0_t",       "phi_error", "exp_phi_0_t", "sibony_lower_bound",
               "azukawa", "gamma_origin", "gap"};
  const auto G = hartogs::HartogsDomain::exam1();
  const ComplexVector x0{1.0, 0.0, 0.0};
  const auto phi00 = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, 0.0});
  const MetricValue gamma = hartogs::proven_value(G, MetricKind::caratheodory(), ComplexVector{0.0, 0.0, 0.0}, x0);
  t.holds = std::isfinite(phi00.value) && phi00.certified_error <= 1e-8 && gamma.value() == 0.0 &&
            gamma.status == ValueStatus::ProvenExact;
  for (double tt : {0.5, 0.2, 0.1, 0.05, 0.01, 0.001}) {
    const ComplexVector ct{0.0, 0.0, tt};
    const auto phi = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, tt});
    const double lower = hartogs::candidate_lower_bound(G, ct, MetricKind::sibony_metric(2), x0);
    const MetricValue A = hartogs::proven_value(G, MetricKind::azukawa(), ct, x0);
    t.rows.push_back(row({tt, phi.value, phi.certified_error, std::exp(phi.value), lower, A.value(), gamma.value(),
                          lower - gamma.value()}));
    const double tol = 2.0 * std::exp(phi.value) * phi.certified_error + A.error;
    if (std::abs(lower - A.value()) > tol || !(lower > gamma.value())) t.holds = false;
  }
  t.summary = "gamma at the origin is 0 while S^(2p) = A = e^{phi(0,t)} > 0 at c_t";
  return t;
}

}  // namespace invmetrics::demos
