#include "invmetrics/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "invmetrics/balanced.hpp"
#include "invmetrics/disc.hpp"
#include "invmetrics/hartogs.hpp"
#include "invmetrics/numerics.hpp"
#include "invmetrics/reinhardt.hpp"

namespace invmetrics::verify {

namespace {

constexpr std::size_t kMaxStoredFailures = 20;
constexpr double kNormalizationTol = 1e-15;
constexpr double kClosedFormTol = 1e-12;
constexpr double kOracleRelTol = 0.02;
constexpr double kErrorViolation = 1e300;

using reinhardt::ArithmeticClass;
using reinhardt::ExponentVector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi) { return std::exp(range(std::log(lo), std::log(hi))); }
  Complex phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }
  std::size_t index(std::size_t n) { return std::min(n - 1, static_cast<std::size_t>(uniform() * n)); }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t property_seed(std::uint64_t seed, std::string_view property) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : property) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t x = seed ^ h;
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Outcome {
  double violation = 0.0;
  bool failed = false;
  std::string message;
};

double scaled(double tol, double rhs) { return tol * std::max(1.0, std::abs(rhs)); }

// ---------------------------------------------------------------------------
// Sampling

struct AlphaEntry {
  std::vector<double> alpha;
  ArithmeticClass cls;
};

const std::vector<AlphaEntry>& chain_alphas() {
  static const std::vector<AlphaEntry> list = {
      {{1, 2, 2}, ArithmeticClass::RelPrimeIntegers},
      {{2, 3}, ArithmeticClass::RelPrimeIntegers},
      {{1, 1}, ArithmeticClass::RelPrimeIntegers},
      {{3, 1}, ArithmeticClass::RelPrimeIntegers},
      {{1, 1, 1}, ArithmeticClass::RelPrimeIntegers},
      {{2, 1}, ArithmeticClass::RelPrimeIntegers},
      {{-1, 2}, ArithmeticClass::RelPrimeIntegers},
      {{1, -1}, ArithmeticClass::RelPrimeIntegers},
      {{std::numbers::sqrt2, 1}, ArithmeticClass::NotInRZn},
      {{1, std::numbers::sqrt2, std::numbers::sqrt3}, ArithmeticClass::NotInRZn},
      {{1, -std::numbers::sqrt2}, ArithmeticClass::NotInRZn},
  };
  return list;
}

const std::vector<AlphaEntry>& oracle_alphas() {
  static const std::vector<AlphaEntry> list = {
      {{1, 1}, ArithmeticClass::RelPrimeIntegers},
      {{1, 2, 2}, ArithmeticClass::RelPrimeIntegers},
      {{2, 3}, ArithmeticClass::RelPrimeIntegers},
      {{3, 1}, ArithmeticClass::RelPrimeIntegers},
      {{1, 1, 1}, ArithmeticClass::RelPrimeIntegers},
      {{2, 1}, ArithmeticClass::RelPrimeIntegers},
      {{std::numbers::sqrt2, 1}, ArithmeticClass::NotInRZn},
      {{1, std::numbers::sqrt2, std::numbers::sqrt3}, ArithmeticClass::NotInRZn},
  };
  return list;
}

std::vector<std::size_t> positive_indices(const ExponentVector& alpha) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < alpha.dim(); ++j)
    if (alpha[j] > 0) out.push_back(j);
  return out;
}

std::vector<std::size_t> choose_zero_set(Rng& rng, const ExponentVector& alpha, std::size_t sigma) {
  std::vector<std::size_t> pool = positive_indices(alpha);
  sigma = std::min(sigma, pool.size());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sigma; ++i) {
    const std::size_t k = rng.index(pool.size());
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Point of D_alpha vanishing exactly on `zeros`; the other moduli are
// log-uniform in [lo, hi] with uniform phases. Without zeros one coordinate is
// rescaled so that |z^alpha| equals a log-uniform target in [t_lo, t_hi].
ComplexVector sample_reinhardt(Rng& rng, const ExponentVector& alpha, const std::vector<std::size_t>& zeros,
                               double lo, double hi, double t_lo, double t_hi) {
  const std::size_t n = alpha.dim();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> rho(n);
    std::vector<Complex> ph(n);
    for (std::size_t j = 0; j < n; ++j) {
      rho[j] = rng.log_uniform(lo, hi);
      ph[j] = rng.phase();
    }
    for (std::size_t j : zeros) rho[j] = 0.0;
    if (zeros.empty()) {
      const double target = rng.log_uniform(t_lo, t_hi);
      const std::size_t pivot = rng.index(n);
      double log_cur = 0.0;
      for (std::size_t j = 0; j < n; ++j) log_cur += alpha[j] * std::log(rho[j]);
      rho[pivot] *= std::exp((std::log(target) - log_cur) / alpha[pivot]);
      if (!(rho[pivot] >= lo * 1e-2 && rho[pivot] <= hi * 1e2)) continue;
    }
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = rho[j] * ph[j];
    ComplexVector v(std::move(z));
    if (reinhardt::contains(alpha, v)) return v;
  }
  throw Error(ErrorKind::InvalidInput, "could not sample a point of D_alpha");
}

ComplexVector random_direction(Rng& rng, std::size_t n, bool allow_zero = true) {
  std::vector<Complex> x(n);
  for (auto& c : x) c = rng.log_uniform(0.1, 2.0) * rng.phase();
  if (allow_zero && n > 1 && rng.uniform() < 0.1) x[rng.index(n)] = 0.0;
  return ComplexVector(std::move(x));
}

Complex disc_sample(Rng& rng, double rmax) { return rmax * std::sqrt(rng.uniform()) * rng.phase(); }

// ---------------------------------------------------------------------------
// Case evaluation (shared by the suites and replay)

MetricValue eval(const DomainSpec& d, const MetricKind& k, const ComplexVector& a, const ComplexVector& v) {
  return evaluate(d, k, a, v);
}

std::optional<MetricValue> eval_if_known(const DomainSpec& d, const MetricKind& k, const ComplexVector& a,
                                         const ComplexVector& v) {
  try {
    return evaluate(d, k, a, v);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NotProven:
      case ErrorKind::Unsupported:
      case ErrorKind::UnsupportedKind:
        return std::nullopt;
      default: throw;
    }
  }
}

void note(Outcome& o, double violation, bool failed, const std::string& what) {
  if (violation > o.violation || (failed && !o.failed)) o.violation = std::max(o.violation, violation);
  if (failed && !o.failed) {
    o.failed = true;
    o.message = what;
  }
}

Outcome start() { return {-std::numeric_limits<double>::infinity(), false, {}}; }

Outcome case_chain(const Json& c) {
  const DomainSpec d = spec::parse_domain(c.at("domain"));
  const ComplexVector a = spec::point_from_json(c.at("base"));
  const ComplexVector z = spec::point_from_json(c.at("target"));
  const ComplexVector x = spec::point_from_json(c.at("direction"));
  const int p = c.at("order").get<int>();
  const double tol = c.at("tolerance").get<double>();

  const MetricValue m = eval(d, MetricKind::mobius(), a, z);
  const MetricValue s = eval(d, MetricKind::sibony_function(p), a, z);
  const MetricValue g = eval(d, MetricKind::green(), a, z);
  const MetricValue gm = eval(d, MetricKind::caratheodory(), a, x);
  const MetricValue S = eval(d, MetricKind::sibony_metric(2 * p), a, x);
  const MetricValue A = eval(d, MetricKind::azukawa(), a, x);

  Outcome o = start();
  auto le = [&](const MetricValue& lo, const MetricValue& hi, const char* what) {
    const double v = lo.lower - hi.upper;
    note(o, v, v > scaled(tol, hi.upper), what);
  };
  le(m, s, "mobius <= sibony-function");
  le(s, g, "sibony-function <= green");
  le(gm, S, "caratheodory <= sibony-metric");
  le(S, A, "sibony-metric <= azukawa");
  for (const MetricValue* v : {&m, &s, &g, &gm, &S, &A})
    if (!is_consistent(*v)) note(o, v->lower - v->upper, true, "lower > upper in an enclosure");
  return o;
}

Outcome case_contractibility(const Json& c) {
  const HolomorphicMapSpec f = spec::map_from_json(c.at("map"));
  const DomainSpec src = spec::parse_domain(c.at("source"));
  const DomainSpec tgt = spec::parse_domain(c.at("target"));
  const ComplexVector a = spec::point_from_json(c.at("base"));
  const ComplexVector z = spec::point_from_json(c.at("point"));
  const ComplexVector x = spec::point_from_json(c.at("direction"));
  const double tol = c.at("tolerance").get<double>();

  const ComplexVector fa = apply_map(f, a);
  const ComplexVector fz = apply_map(f, z);
  if (!domain_contains(tgt, fa) || !domain_contains(tgt, fz))
    throw Error(ErrorKind::MapRangeViolation, "sample leaves the target domain");
  const ComplexVector fx = map_differential(f, a, x);

  Outcome o = start();
  auto compare = [&](const MetricKind& k, const ComplexVector& u, const ComplexVector& fu) {
    const auto lhs = eval_if_known(tgt, k, fa, fu);
    if (!lhs) return;
    const auto rhs = eval_if_known(src, k, a, u);
    if (!rhs) return;
    const double v = lhs->lower - rhs->upper;
    note(o, v, v > scaled(tol, rhs->upper), k.name());
  };
  compare(MetricKind::mobius(), z, fz);
  compare(MetricKind::green(), z, fz);
  for (int p = 1; p <= 4; ++p) compare(MetricKind::sibony_function(p), z, fz);
  compare(MetricKind::caratheodory(), x, fx);
  compare(MetricKind::azukawa(), x, fx);
  for (int p = 1; p <= 4; ++p) compare(MetricKind::sibony_metric(2 * p), x, fx);
  if (o.violation == -std::numeric_limits<double>::infinity()) o.violation = 0.0;
  return o;
}

MetricKind kind_at(int index) {
  // 0..2: mobius, green, caratheodory; 3: azukawa; then Sibony orders.
  switch (index) {
    case 0: return MetricKind::mobius();
    case 1: return MetricKind::green();
    case 2: return MetricKind::caratheodory();
    case 3: return MetricKind::azukawa();
    default: break;
  }
  return index < 8 ? MetricKind::sibony_function(index - 3) : MetricKind::sibony_metric(index - 7);
}

Outcome case_normalization(const Json& c) {
  const MetricKind k = spec::kind_from_json(c.at("kind"));
  const double t = c.at("t").get<double>();
  const bool odd_metric = k.tag() == MetricKind::Tag::SibonyMetric && k.order() % 2 == 1;
  const double expected = odd_metric ? 0.0 : t;
  const MetricValue ref = disc::disc_reference_value(k, t);
  const MetricValue direct = k.is_function() ? disc::eval_function(k, 0.0, t) : disc::eval_metric(k, 0.0, t);
  Outcome o = start();
  for (double v : {ref.lower, ref.upper, direct.lower, direct.upper}) {
    const double err = std::abs(v - expected);
    note(o, err, err > kNormalizationTol, k.name() + " reference value");
  }
  if (odd_metric && ref.status != ValueStatus::ProvenExact)
    note(o, 0.0, true, "odd-order metric is not reported as ProvenExact");
  return o;
}

Outcome case_nonusc(const Json& c) {
  const ExponentVector alpha({1, 2, 2}, ArithmeticClass::RelPrimeIntegers);
  const ComplexVector z = spec::point_from_json(c.at("target"));
  const int k = c.at("k").get<int>();
  const double mod = reinhardt::monomial_modulus(alpha, z);
  const ComplexVector origin{0.0, 0.0, 0.0};
  const ComplexVector ak{1.0 / k, 0.0, 0.0};
  const MetricKind s = MetricKind::sibony_function(2);
  const double s0 = reinhardt::eval_function(alpha, s, origin, z).value();
  const double sk = reinhardt::eval_function(alpha, s, ak, z).value();
  Outcome o = start();
  const double e0 = std::abs(s0 - mod);
  const double ek = std::abs(sk - std::sqrt(mod));
  note(o, e0, e0 > kClosedFormTol * std::max(mod, 1e-300) && e0 > kClosedFormTol * 1e-3, "s(0,z) = |z^alpha|");
  note(o, ek, ek > kClosedFormTol, "s((1/k,0,0),z) = |z^alpha|^(1/2)");
  note(o, s0 - sk, !(sk - s0 > 0.0), "s((1/k,0,0),z) > s(0,z)");
  return o;
}

Outcome case_oracle(const Json& c) {
  const DomainSpec d = spec::parse_domain(c.at("domain"));
  const ComplexVector a = spec::point_from_json(c.at("base"));
  const ComplexVector x = spec::point_from_json(c.at("direction"));
  const double azukawa = eval(d, MetricKind::azukawa(), a, x).value();
  numerics::CurveSampler sampler = numerics::along_line(
      [&d, &a](const ComplexVector& z) { return eval(d, MetricKind::green(), a, z).value(); }, a, x);
  sampler.membership = [&](Complex lambda) { return domain_contains(d, a + x * lambda); };
  const numerics::LimsupResult r = numerics::limsup_quotient(sampler);
  Outcome o;
  if (azukawa == 0.0) {
    o.violation = std::abs(r.estimate);
    o.failed = o.violation > 1e-12;
  } else {
    o.violation = std::abs(r.estimate - azukawa) / azukawa;
    o.failed = o.violation > kOracleRelTol;
  }
  if (o.failed) o.message = "limsup quotient disagrees with the Azukawa closed form";
  return o;
}

ComplexVector rotate(const ComplexVector& z, const std::vector<double>& phases) {
  std::vector<Complex> out(z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) out[j] = z[j] * std::polar(1.0, phases[j]);
  return ComplexVector(std::move(out));
}

Outcome case_rotation(const Json& c) {
  const DomainSpec d = spec::parse_domain(c.at("domain"));
  const ComplexVector a = spec::point_from_json(c.at("base"));
  const ComplexVector z = spec::point_from_json(c.at("target"));
  const ComplexVector x = spec::point_from_json(c.at("direction"));
  const auto phases = c.at("phases").get<std::vector<double>>();
  const int p = c.at("order").get<int>();
  const double tol = c.at("tolerance").get<double>();
  if (phases.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "one phase per coordinate");
  const ComplexVector ra = rotate(a, phases), rz = rotate(z, phases), rx = rotate(x, phases);

  Outcome o = start();
  auto same = [&](const MetricKind& k, const ComplexVector& u, const ComplexVector& ru) {
    const MetricValue v0 = eval(d, k, a, u);
    const MetricValue v1 = eval(d, k, ra, ru);
    const double err = std::max(std::abs(v0.lower - v1.lower), std::abs(v0.upper - v1.upper));
    note(o, err, err > scaled(tol, v0.upper), k.name());
  };
  same(MetricKind::mobius(), z, rz);
  same(MetricKind::green(), z, rz);
  same(MetricKind::sibony_function(p), z, rz);
  same(MetricKind::caratheodory(), x, rx);
  same(MetricKind::azukawa(), x, rx);
  same(MetricKind::sibony_metric(2 * p), x, rx);
  return o;
}

Outcome case_regularization(const Json& c) {
  const Complex b = spec::point_from_json(c.at("b"))[0];
  const double t = c.at("t").get<double>();
  const int p = c.at("order").get<int>();
  const auto G = hartogs::HartogsDomain::exam1();
  const auto D = hartogs::HartogsDomain::exam1_slice();
  const MetricKind k = MetricKind::sibony_function(p);
  const double lower = hartogs::candidate_lower_bound(G, ComplexVector{0.0, 0.0, t}, k, ComplexVector{b, 0.0, 0.0});
  const double slice = hartogs::proven_value(D, k, ComplexVector{0.0, 0.0}, ComplexVector{b, 0.0}).upper;
  Outcome o;
  o.violation = slice - lower;
  o.failed = !(lower > slice);
  if (o.failed) o.message = "embedded lower bound does not exceed the slice value";
  return o;
}

// Fixed published values.
struct Example {
  const char* name;
  std::function<Outcome()> run;
};

Outcome expect_near(double got, double want, double tol, const std::string& what) {
  Outcome o;
  o.violation = std::abs(got - want);
  o.failed = !(o.violation <= tol);
  if (o.failed) o.message = what;
  return o;
}

Outcome combine(std::initializer_list<Outcome> parts) {
  Outcome o = start();
  for (const auto& p : parts) note(o, p.violation, p.failed, p.message);
  return o;
}

const std::vector<Example>& examples() {
  static const std::vector<Example> list = [] {
    std::vector<Example> v;
    const ExponentVector a122({1, 2, 2}, ArithmeticClass::RelPrimeIntegers);
    const ExponentVector a11({1, 1}, ArithmeticClass::RelPrimeIntegers);
    const ExponentVector a31({3, 1}, ArithmeticClass::RelPrimeIntegers);
    const ExponentVector a23({2, 3}, ArithmeticClass::RelPrimeIntegers);
    const ExponentVector ar2({std::numbers::sqrt2, 1}, ArithmeticClass::NotInRZn);
    const ComplexVector half3{0.5, 0.5, 0.5};
    const ComplexVector zero3{0.0, 0.0, 0.0};
    const ComplexVector zero2{0.0, 0.0};

    v.push_back({"disc-mobius-0.7", [] {
                   return expect_near(disc::mobius_distance(Complex(0.0), Complex(0.7)), 0.7, 0.0, "m_D(0,0.7)");
                 }});
    v.push_back({"disc-metrics-at-direction-1", [] {
                   Outcome o = start();
                   for (const MetricKind& k : {MetricKind::caratheodory(), MetricKind::azukawa(),
                                               MetricKind::sibony_metric(2), MetricKind::sibony_metric(4)}) {
                     const double e = std::abs(disc::eval_metric(k, 0.0, 1.0).value() - 1.0);
                     note(o, e, e != 0.0, k.name());
                   }
                   return o;
                 }});
    v.push_back({"disc-green-0.3", [] {
                   return expect_near(disc::eval_function(MetricKind::green(), 0.0, 0.3).value(), 0.3, 0.0, "g_D(0,0.3)");
                 }});
    v.push_back({"disc-odd-metric-zero", [] {
                   const MetricValue s1 = disc::eval_metric(MetricKind::sibony_metric(1), 0.0, 1.0);
                   Outcome o = expect_near(s1.value(), 0.0, 0.0, "S^(1)_D(0;1)");
                   if (s1.status != ValueStatus::ProvenExact) note(o, 0.0, true, "status");
                   return o;
                 }});
    v.push_back({"classify-122-origin", [=] {
                   const auto pc = reinhardt::classify(a122, zero3);
                   const bool ok = pc.sigma == 3 && pc.r == 5.0 && pc.mu && *pc.mu == 1.0;
                   return Outcome{0.0, !ok, ok ? "" : "sigma/r/mu at 0"};
                 }});
    v.push_back({"classify-122-third", [=] {
                   const auto pc = reinhardt::classify(a122, ComplexVector{1.0 / 3.0, 0.0, 0.0});
                   const bool ok = pc.sigma == 2 && pc.r == 4.0 && pc.mu && *pc.mu == 2.0;
                   return Outcome{0.0, !ok, ok ? "" : "sigma/r/mu at (1/3,0,0)"};
                 }});
    v.push_back({"reinhardt-122-origin-values", [=] {
                   return combine({
                       expect_near(reinhardt::eval_function(a122, MetricKind::green(), zero3, half3).value(), 0.5,
                                   1e-15, "green"),
                       expect_near(reinhardt::eval_function(a122, MetricKind::sibony_function(2), zero3, half3).value(),
                                   1.0 / 32, 1e-15, "sibony"),
                       expect_near(reinhardt::eval_function(a122, MetricKind::mobius(), zero3, half3).value(), 1.0 / 32,
                                   1e-15, "mobius"),
                   });
                 }});
    v.push_back({"reinhardt-122-third-sibony", [=] {
                   return expect_near(reinhardt::eval_function(a122, MetricKind::sibony_function(2),
                                                               ComplexVector{1.0 / 3.0, 0.0, 0.0}, half3)
                                          .value(),
                                      std::sqrt(1.0 / 32), 1e-15, "s((1/3,0,0),z)");
                 }});
    v.push_back({"generic-mobius-green-zero", [=] {
                   const ComplexVector a{0.5, 0.5};
                   const ComplexVector z{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
                   return combine({
                       expect_near(reinhardt::eval_function(ar2, MetricKind::mobius(), a, z).value(), 0.0, 0.0, "mobius"),
                       expect_near(reinhardt::eval_function(ar2, MetricKind::green(), a, z).value(), 0.0, 0.0, "green"),
                   });
                 }});
    v.push_back({"higher-sibony-4k-on-11", [=] {
                   Outcome o = start();
                   for (int k = 1; k <= 3; ++k) {
                     const MetricValue s = reinhardt::eval_metric(a11, MetricKind::sibony_metric(4 * k), zero2,
                                                                  ComplexVector{1.0, 1.0});
                     const Outcome e = expect_near(s.value(), 1.0, 1e-15, "S^(4k)");
                     note(o, e.violation, e.failed || !s.is_exact(), "S^(4k)_(1,1)(0;(1,1)) = 1");
                   }
                   return o;
                 }});
    v.push_back({"sibony-metric-31-zero", [=] {
                   return expect_near(
                       reinhardt::eval_metric(a31, MetricKind::sibony_metric(2), zero2, ComplexVector{1.0, 1.0}).value(),
                       0.0, 0.0, "S_(3,1)(0;X)");
                 }});
    v.push_back({"balanced-monomial-chain", [] {
                   const auto h = balanced::MinkowskiSpec::monomial({0.5, 0.5});
                   const ComplexVector x{1.0, 1.0};
                   return combine({
                       expect_near(balanced::balanced_metrics_at_zero(h, true, MetricKind::azukawa(), x).value(), 1.0,
                                   1e-15, "azukawa"),
                       expect_near(balanced::balanced_metrics_at_zero(h, true, MetricKind::sibony_metric(2), x).upper,
                                   0.0, 1e-9, "sibony"),
                   });
                 }});
    v.push_back({"usc-product-bound-limit", [] {
                   const auto hd = balanced::MinkowskiSpec::weighted_norm({1.0, 2.0}, 2.0);
                   const ComplexVector b{0.3, Complex(0.1, 0.2)};
                   const double want = balanced::minkowski_eval(hd, b);
                   const double got = balanced::usc_product_bound(0.1, 1.0 - 1e-12, 1e12, hd, ComplexVector{0.0}, b);
                   return expect_near(got, want, 1e-10, "R -> 1, k -> inf limit");
                 }});
    v.push_back({"exam1-phi-origin-finite", [] {
                   const auto phi = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, 0.0});
                   const bool ok = std::isfinite(phi.value) && phi.certified_error <= 1e-8;
                   return Outcome{phi.certified_error, !ok, ok ? "" : "phi(0,0) not certified to 1e-8"};
                 }});
    v.push_back({"exam1-candidate-function-at-ct", [] {
                   const auto G = hartogs::HartogsDomain::exam1();
                   const auto phi = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, 0.0});
                   const double b = 0.5;
                   const double lb = hartogs::candidate_lower_bound(G, ComplexVector{0.0, 0.0, 0.1},
                                                                    MetricKind::sibony_function(2),
                                                                    ComplexVector{b, 0.0, 0.0});
                   Outcome o = expect_near(lb, b * std::exp(phi.value), 2 * b * std::exp(phi.value) * phi.certified_error,
                                           "|b| e^{phi(0,0)}");
                   if (!(lb > 0)) note(o, 0.0, true, "lower bound not positive");
                   return o;
                 }});
    v.push_back({"exam6-metric-at-ct", [] {
                   const auto G = hartogs::HartogsDomain::exam1();
                   Outcome o = start();
                   for (double t : {0.5, 0.1, 0.01}) {
                     const ComplexVector ct{0.0, 0.0, t};
                     const ComplexVector x0{1.0, 0.0, 0.0};
                     const auto phi = hartogs::phi_eval(hartogs::Exam1Series{}, ComplexVector{0.0, t});
                     const double lb = hartogs::candidate_lower_bound(G, ct, MetricKind::sibony_metric(4), x0);
                     const MetricValue A = hartogs::proven_value(G, MetricKind::azukawa(), ct, x0);
                     const double tol = 2 * std::exp(phi.value) * phi.certified_error;
                     const Outcome e1 = expect_near(lb, std::exp(phi.value), tol, "S lower bound = e^{phi(0,t)}");
                     const Outcome e2 = expect_near(lb, A.value(), tol + A.error, "S lower bound = proven A");
                     note(o, e1.violation, e1.failed, e1.message);
                     note(o, e2.violation, e2.failed, e2.message);
                   }
                   return o;
                 }});
    v.push_back({"exam3-candidate-on-Gk", [] {
                   const double z2 = 0.1;
                   const auto phik = hartogs::phi_eval(hartogs::Exam3Series{5, 0}, ComplexVector{0.0});
                   const double lb = hartogs::candidate_lower_bound(hartogs::HartogsDomain::exam3(5), ComplexVector{0.0, 0.0},
                                                                    MetricKind::sibony_function(3), ComplexVector{0.0, z2});
                   return expect_near(lb, z2 * std::exp(phik.value), 1e-12, "|z2| e^{phi_k(0)}");
                 }});
    v.push_back({"exam1-proven-zero-values", [] {
                   const auto G = hartogs::HartogsDomain::exam1();
                   Outcome o = start();
                   for (int p = 1; p <= 4; ++p) {
                     const MetricValue s = hartogs::proven_value(G, MetricKind::sibony_function(p), ComplexVector{0.0, 0.0, 0.0},
                                                                 ComplexVector{0.7, 0.0, 0.0});
                     note(o, std::abs(s.value()), s.value() != 0.0 || s.status != ValueStatus::ProvenExact, "s^(p)(0,z0)");
                   }
                   const MetricValue g = hartogs::proven_value(G, MetricKind::caratheodory(), ComplexVector{0.0, 0.0, 0.0},
                                                               ComplexVector{1.0, 0.0, 0.0});
                   note(o, std::abs(g.value()), g.value() != 0.0 || g.status != ValueStatus::ProvenExact, "gamma(0;X0)");
                   return o;
                 }});
    v.push_back({"exam3-proven-zero", [] {
                   Outcome o = start();
                   for (int p = 1; p <= 4; ++p) {
                     const MetricValue s = hartogs::proven_value(hartogs::HartogsDomain::exam3(), MetricKind::sibony_function(p),
                                                                 ComplexVector{0.0, 0.0}, ComplexVector{0.0, 0.1});
                     note(o, std::abs(s.value()), s.value() != 0.0 || s.status != ValueStatus::ProvenExact, "s^(p)_G");
                   }
                   return o;
                 }});
    v.push_back({"exam3-phi-k-decreasing", [] {
                   const auto rows = hartogs::increasing_family_table(50, 0.1, 2);
                   Outcome o = start();
                   for (std::size_t i = 1; i < rows.size(); ++i) {
                     const double d = rows[i].exp_phi_k0 - rows[i - 1].exp_phi_k0;
                     note(o, d, !(d < 0), "e^{phi_k(0)} strictly decreasing");
                   }
                   return o;
                 }});
    v.push_back({"example4-strict-chain", [=] {
                   const ComplexVector z{0.5, 0.5};
                   const double m = reinhardt::eval_function(a23, MetricKind::mobius(), zero2, z).value();
                   const double s = reinhardt::eval_function(a23, MetricKind::sibony_function(2), zero2, z).value();
                   const double g = reinhardt::eval_function(a23, MetricKind::green(), zero2, z).value();
                   Outcome o = combine({expect_near(m, 1.0 / 32, 1e-15, "m"), expect_near(s, std::sqrt(1.0 / 32), 1e-15, "s"),
                                        expect_near(g, std::pow(1.0 / 32, 0.2), 1e-15, "g")});
                   if (!(m < s && s < g)) note(o, 0.0, true, "m < s < g");
                   return o;
                 }});
    v.push_back({"disc-chain-equality", [] {
                   Outcome o = start();
                   for (int i = 0; i < 10; ++i) {
                     const double t = 0.1 * i;
                     for (const MetricKind& k : {MetricKind::mobius(), MetricKind::green(), MetricKind::sibony_function(1),
                                                 MetricKind::sibony_function(2), MetricKind::sibony_function(3)}) {
                       const double e = std::abs(disc::eval_function(k, 0.0, t).value() - t);
                       note(o, e, e > 1e-15, k.name());
                     }
                   }
                   return o;
                 }});
    v.push_back({"slice-embedding-map", [] {
                   const HolomorphicMapSpec f = CoordinateEmbedding{3, {{2, Complex(0.0, 0.0)}}};
                   const Complex b(0.4, -0.3);
                   const ComplexVector out = apply_map(f, ComplexVector{b, 0.0});
                   const bool ok = out == ComplexVector{b, 0.0, 0.0};
                   return Outcome{0.0, !ok, ok ? "" : "(b,0) -> (b,0,0)"};
                 }});
    return v;
  }();
  return list;
}

Outcome case_example(const Json& c) {
  const std::string name = c.at("name").get<std::string>();
  for (const auto& e : examples())
    if (name == e.name) return e.run();
  throw Error(ErrorKind::InvalidInput, "unknown example '" + name + "'");
}

Outcome evaluate_case(const Json& c) {
  const std::string check = c.at("check").get<std::string>();
  if (check == "chain") return case_chain(c);
  if (check == "contractibility") return case_contractibility(c);
  if (check == "normalization") return case_normalization(c);
  if (check == "nonusc") return case_nonusc(c);
  if (check == "oracle") return case_oracle(c);
  if (check == "rotation") return case_rotation(c);
  if (check == "regularization") return case_regularization(c);
  if (check == "example") return case_example(c);
  throw Error(ErrorKind::InvalidInput, "unknown check '" + check + "'");
}

// ---------------------------------------------------------------------------

Verdict run_property(const std::string& property, double tolerance, std::size_t count, std::uint64_t seed,
                     const std::function<Json(Rng&, std::size_t)>& make_case) {
  Verdict v;
  v.property = property;
  v.tolerance = tolerance;
  v.max_violation = -std::numeric_limits<double>::infinity();
  Rng rng(property_seed(seed, property));
  for (std::size_t i = 0; i < count; ++i) {
    Json c = make_case(rng, i);
    Outcome o;
    try {
      o = evaluate_case(c);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MapRangeViolation) throw;
      o = {kErrorViolation, true, e.what()};
    } catch (const std::exception& e) {
      o = {kErrorViolation, true, e.what()};
    }
    ++v.samples_run;
    v.max_violation = std::max(v.max_violation, o.violation);
    if (o.failed) {
      ++v.failure_count;
      if (v.failures.size() < kMaxStoredFailures) v.failures.push_back({i, o.violation, o.message, std::move(c)});
    }
  }
  if (v.samples_run == 0) v.max_violation = 0.0;
  return v;
}

Json with_header(const char* check, double tolerance) {
  Json j;
  j["check"] = check;
  j["tolerance"] = tolerance;
  return j;
}

struct MapCase {
  std::string name;
  HolomorphicMapSpec map;
  DomainSpec source;
  DomainSpec target;
};

DomainSpec reinhardt_domain(std::vector<double> alpha, ArithmeticClass cls = ArithmeticClass::RelPrimeIntegers) {
  return ReinhardtDomain{ExponentVector(std::move(alpha), cls)};
}

MonomialMap monomial_map(std::vector<Complex> coeffs, std::vector<std::vector<int>> exps) {
  return MonomialMap{std::move(coeffs), std::move(exps)};
}

std::vector<MapCase> map_catalog() {
  using C = Complex;
  const double r2 = std::numbers::sqrt2;
  std::vector<MapCase> maps;
  Curve diag;
  diag.shape = Curve::Shape::Monomial;
  diag.coeffs = {1.0, 1.0};
  diag.powers = {1, 1};
  maps.push_back({"disc-diagonal-into-D(1,1)", diag, DiscDomain{}, reinhardt_domain({1, 1})});
  maps.push_back({"identity-on-D(1,2,2)", monomial_map({1.0, 1.0, 1.0}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                  reinhardt_domain({1, 2, 2}), reinhardt_domain({1, 2, 2})});
  maps.push_back({"product-D(1,1)-to-disc", monomial_map({1.0}, {{1, 1}}), reinhardt_domain({1, 1}), DiscDomain{}});
  maps.push_back({"D(1,2,2)-to-D(1,1)", monomial_map({1.0, 1.0}, {{1, 2, 0}, {0, 0, 2}}), reinhardt_domain({1, 2, 2}),
                  reinhardt_domain({1, 1})});
  maps.push_back({"D(2,3)-to-disc", monomial_map({1.0}, {{2, 3}}), reinhardt_domain({2, 3}), DiscDomain{}});
  maps.push_back({"disc-into-D(1,2,2)", monomial_map({1.0, 0.5, 0.5}, {{1}, {0}, {0}}), DiscDomain{},
                  reinhardt_domain({1, 2, 2})});
  maps.push_back({"swap-on-D(1,1)", monomial_map({1.0, 1.0}, {{0, 1}, {1, 0}}), reinhardt_domain({1, 1}),
                  reinhardt_domain({1, 1})});
  maps.push_back({"D(1,1)-to-D(1,2)", monomial_map({1.0, 1.0}, {{1, 1}, {0, 0}}), reinhardt_domain({1, 1}),
                  reinhardt_domain({1, 2})});
  maps.push_back({"identity-on-D(sqrt2,1)", monomial_map({1.0, 1.0}, {{1, 0}, {0, 1}}),
                  reinhardt_domain({r2, 1}, ArithmeticClass::NotInRZn),
                  reinhardt_domain({r2, 1}, ArithmeticClass::NotInRZn)});
  maps.push_back({"disc-diagonal-into-D(sqrt2,1)", diag, DiscDomain{}, reinhardt_domain({r2, 1}, ArithmeticClass::NotInRZn)});
  maps.push_back({"D(2,1)-to-D(1,1)", monomial_map({1.0, 1.0}, {{1, 0}, {1, 1}}), reinhardt_domain({2, 1}),
                  reinhardt_domain({1, 1})});
  maps.push_back({"quotient-D(1,-1)-to-disc", monomial_map({1.0}, {{1, -1}}), reinhardt_domain({1, -1}), DiscDomain{}});
  Curve line;
  line.shape = Curve::Shape::Affine;
  line.point = ComplexVector{0.3, 0.4};
  line.direction = ComplexVector{0.1, 0.2};
  maps.push_back({"affine-disc-into-D(1,1)", line, DiscDomain{}, reinhardt_domain({1, 1})});
  maps.push_back({"rotation-on-D(1,1,1)", monomial_map({C(0, 1), C(-1, 0), C(0.6, 0.8)}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                  reinhardt_domain({1, 1, 1}), reinhardt_domain({1, 1, 1})});
  maps.push_back({"slice-embedding-into-exam1", CoordinateEmbedding{3, {{2, C(0.0, 0.0)}}},
                  hartogs::HartogsDomain::exam1_slice(), hartogs::HartogsDomain::exam1()});
  return maps;
}

// (base, point, direction) in the source domain.
std::tuple<ComplexVector, ComplexVector, ComplexVector> sample_source(Rng& rng, const DomainSpec& d) {
  if (std::holds_alternative<DiscDomain>(d)) {
    const Complex a = rng.uniform() < 0.1 ? Complex(0.0) : disc_sample(rng, 0.9);
    return {ComplexVector{a}, ComplexVector{disc_sample(rng, 0.95)}, random_direction(rng, 1, false)};
  }
  if (const auto* r = std::get_if<ReinhardtDomain>(&d)) {
    const std::size_t n = r->alpha.dim();
    const std::size_t sigma = rng.index(std::min<std::size_t>(3, positive_indices(r->alpha).size()) + 1);
    const ComplexVector a = sample_reinhardt(rng, r->alpha, choose_zero_set(rng, r->alpha, sigma), 0.05, 2.0, 1e-4, 0.95);
    const ComplexVector z = sample_reinhardt(rng, r->alpha, {}, 0.05, 2.0, 1e-6, 0.999);
    return {a, z, random_direction(rng, n)};
  }
  // exam1 slice: proven values exist at base 0 along the first axis
  const Complex b = 4.0 * std::sqrt(rng.uniform()) * rng.phase();
  const Complex x1 = rng.log_uniform(0.1, 2.0) * rng.phase();
  return {ComplexVector{0.0, 0.0}, ComplexVector{b, 0.0}, ComplexVector{x1, 0.0}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"chain",    "contractibility", "normalization",  "nonusc", "oracle",
                                                 "rotation", "regularization",  "examples",       "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Verdict check_chain(const SuiteConfig& config) {
  return run_property("chain", config.tolerance, config.samples, config.seed, [&](Rng& rng, std::size_t i) {
    Json c = with_header("chain", config.tolerance);
    const int p = 1 + static_cast<int>(rng.index(4));
    if (i % 8 == 7) {
      c["domain"] = spec::domain_to_json(DiscDomain{});
      c["base"] = spec::point_to_json(ComplexVector{disc_sample(rng, 0.9)});
      c["target"] = spec::point_to_json(ComplexVector{disc_sample(rng, 0.95)});
      c["direction"] = spec::point_to_json(random_direction(rng, 1, false));
    } else {
      const AlphaEntry& e = chain_alphas()[rng.index(chain_alphas().size())];
      const ExponentVector alpha(e.alpha, e.cls);
      const std::size_t max_sigma = std::min<std::size_t>(3, positive_indices(alpha).size());
      const std::size_t sigma = rng.index(max_sigma + 1);
      c["domain"] = spec::domain_to_json(ReinhardtDomain{alpha});
      c["base"] = spec::point_to_json(sample_reinhardt(rng, alpha, choose_zero_set(rng, alpha, sigma), 0.05, 2.0, 1e-3, 0.95));
      c["target"] = spec::point_to_json(sample_reinhardt(rng, alpha, {}, 0.05, 2.0, 1e-6, 0.999));
      c["direction"] = spec::point_to_json(random_direction(rng, alpha.dim()));
    }
    c["order"] = p;
    return c;
  });
}

Verdict check_contractibility(const std::string& property, const HolomorphicMapSpec& f, const DomainSpec& source,
                              const DomainSpec& target, const SuiteConfig& config) {
  if (source_dim(f) != domain_dim(source) || target_dim(f) != domain_dim(target))
    throw Error(ErrorKind::DimensionMismatch, "map dimensions do not match the domains");
  const Json map_json = spec::map_to_json(f);
  const Json src_json = spec::domain_to_json(source);
  const Json tgt_json = spec::domain_to_json(target);
  return run_property(property, config.tolerance, config.samples, config.seed, [&](Rng& rng, std::size_t) {
    Json c = with_header("contractibility", config.tolerance);
    const auto [a, z, x] = sample_source(rng, source);
    c["map"] = map_json;
    c["source"] = src_json;
    c["target"] = tgt_json;
    c["base"] = spec::point_to_json(a);
    c["point"] = spec::point_to_json(z);
    c["direction"] = spec::point_to_json(x);
    return c;
  });
}

std::vector<Verdict> check_contractibility_catalog(const SuiteConfig& config) {
  std::vector<Verdict> out;
  for (const MapCase& m : map_catalog())
    out.push_back(check_contractibility("contractibility:" + m.name, m.map, m.source, m.target, config));
  return out;
}

Verdict check_normalization(const SuiteConfig& config) {
  constexpr int kKinds = 12;  // 4 basic kinds, Sibony function 1..4, Sibony metric 1..4
  return run_property("normalization", kNormalizationTol, kKinds * 10, config.seed, [](Rng&, std::size_t i) {
    Json c = with_header("normalization", kNormalizationTol);
    c["kind"] = spec::kind_to_json(kind_at(static_cast<int>(i / 10)));
    c["t"] = 0.1 * static_cast<double>(i % 10);
    return c;
  });
}

Verdict check_nonusc_witness(const SuiteConfig& config, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::InvalidInput, "k_max must be >= 1");
  const ExponentVector alpha({1, 2, 2}, ArithmeticClass::RelPrimeIntegers);
  return run_property("nonusc", kClosedFormTol, config.samples, config.seed, [&](Rng& rng, std::size_t i) {
    Json c = with_header("nonusc", kClosedFormTol);
    ComplexVector z;
    if (i == 0) {
      z = ComplexVector{0.5, 0.5, 0.5};
    } else if (i == 1) {
      const double r = std::pow(0.99, 0.2);
      z = ComplexVector{r, r, r};
    } else {
      z = sample_reinhardt(rng, alpha, {}, 0.05, 2.0, 1e-6, 0.999);
    }
    c["target"] = spec::point_to_json(z);
    c["k"] = 1 + static_cast<int>(i % static_cast<std::size_t>(k_max));
    return c;
  });
}

Verdict check_oracle(const SuiteConfig& config) {
  struct Fixed {
    std::vector<double> alpha;
    ComplexVector a, x;
  };
  const std::vector<Fixed> fixed = {
      {{1, 1}, {0.0, 0.0}, {1.0, 1.0}},
      {{1, 1}, {0.0, 0.0}, {1.0, 2.0}},
      {{1, 1}, {0.0, 0.0}, {Complex(0.5, 0.5), 2.0}},
      {{1, 1}, {0.0, 0.0}, {0.3, Complex(0.7, -0.2)}},
      {{1, 1}, {0.3, 0.4}, {1.0, 2.0}},
      {{1, 2, 2}, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}},
  };
  return run_property("oracle", kOracleRelTol, fixed.size() + config.samples, config.seed, [&](Rng& rng, std::size_t i) {
    Json c = with_header("oracle", kOracleRelTol);
    if (i < fixed.size()) {
      c["domain"] = spec::domain_to_json(reinhardt_domain(fixed[i].alpha));
      c["base"] = spec::point_to_json(fixed[i].a);
      c["direction"] = spec::point_to_json(fixed[i].x);
      return c;
    }
    const AlphaEntry& e = oracle_alphas()[rng.index(oracle_alphas().size())];
    const ExponentVector alpha(e.alpha, e.cls);
    const std::size_t sigma = rng.index(std::min<std::size_t>(2, alpha.dim()) + 1);
    const auto zeros = choose_zero_set(rng, alpha, sigma);
    ComplexVector a, x;
    for (int attempt = 0;; ++attempt) {
      a = sample_reinhardt(rng, alpha, zeros, 0.2, 1.5, 1e-3, 0.6);
      std::vector<Complex> xs(alpha.dim());
      for (auto& v : xs) v = rng.log_uniform(0.2, 1.5) * rng.phase();
      x = ComplexVector(std::move(xs));
      bool ok = true;
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (a[j] != Complex(0.0) && std::abs(a[j]) < 0.1) ok = false;
      for (int k = 0; k < 32 && ok; ++k)
        ok = reinhardt::contains(alpha, a + x * std::polar(1e-2, 2.0 * std::numbers::pi * k / 32));
      if (ok || attempt > 100) break;
    }
    c["domain"] = spec::domain_to_json(ReinhardtDomain{alpha});
    c["base"] = spec::point_to_json(a);
    c["direction"] = spec::point_to_json(x);
    return c;
  });
}

Verdict check_rotation(const SuiteConfig& config) {
  return run_property("rotation", config.tolerance, config.samples, config.seed, [&](Rng& rng, std::size_t i) {
    Json c = with_header("rotation", config.tolerance);
    std::size_t n = 1;
    if (i % 8 == 7) {
      c["domain"] = spec::domain_to_json(DiscDomain{});
      c["base"] = spec::point_to_json(ComplexVector{disc_sample(rng, 0.9)});
      c["target"] = spec::point_to_json(ComplexVector{disc_sample(rng, 0.95)});
      c["direction"] = spec::point_to_json(random_direction(rng, 1, false));
    } else {
      const AlphaEntry& e = chain_alphas()[rng.index(chain_alphas().size())];
      const ExponentVector alpha(e.alpha, e.cls);
      n = alpha.dim();
      const std::size_t sigma = rng.index(std::min<std::size_t>(3, positive_indices(alpha).size()) + 1);
      c["domain"] = spec::domain_to_json(ReinhardtDomain{alpha});
      c["base"] = spec::point_to_json(sample_reinhardt(rng, alpha, choose_zero_set(rng, alpha, sigma), 0.05, 2.0, 1e-3, 0.95));
      c["target"] = spec::point_to_json(sample_reinhardt(rng, alpha, {}, 0.05, 2.0, 1e-6, 0.999));
      c["direction"] = spec::point_to_json(random_direction(rng, n));
    }
    std::vector<double> phases(n);
    for (double& t : phases) t = rng.range(0.0, 2.0 * std::numbers::pi);
    c["phases"] = phases;
    c["order"] = 1 + static_cast<int>(rng.index(4));
    return c;
  });
}

Verdict check_regularization(const SuiteConfig& config) {
  return run_property("regularization", 0.0, config.samples, config.seed, [](Rng& rng, std::size_t) {
    Json c = with_header("regularization", 0.0);
    c["b"] = spec::point_to_json(ComplexVector{rng.range(0.05, 4.0) * rng.phase()});
    c["t"] = rng.log_uniform(1e-4, 0.5);
    c["order"] = 1 + static_cast<int>(rng.index(4));
    return c;
  });
}

Verdict check_examples(const SuiteConfig& config) {
  return run_property("examples", 0.0, examples().size(), config.seed, [](Rng&, std::size_t i) {
    Json c = with_header("example", 0.0);
    c["name"] = examples()[i].name;
    return c;
  });
}

std::vector<Verdict> run_suite(const SuiteConfig& config) {
  if (!is_suite(config.name)) throw Error(ErrorKind::InvalidInput, "unknown suite '" + config.name + "'");
  const bool all = config.name == "all";
  std::vector<Verdict> out;
  auto want = [&](const char* n) { return all || config.name == n; };
  if (want("normalization")) out.push_back(check_normalization(config));
  if (want("examples")) out.push_back(check_examples(config));
  if (want("chain")) out.push_back(check_chain(config));
  if (want("rotation")) out.push_back(check_rotation(config));
  if (want("nonusc")) out.push_back(check_nonusc_witness(config));
  if (want("oracle")) out.push_back(check_oracle(config));
  if (want("contractibility"))
    for (auto& v : check_contractibility_catalog(config)) out.push_back(std::move(v));
  if (want("regularization")) out.push_back(check_regularization(config));
  return out;
}

Replay replay(const Json& reproducer) {
  try {
    const Outcome o = evaluate_case(reproducer);
    return {o.violation, o.failed, o.message};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MapRangeViolation) throw;
    return {kErrorViolation, true, e.what()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json report_json(const SuiteConfig& config, const std::vector<Verdict>& verdicts) {
  Json r;
  r["suite"] = config.name;
  r["seed"] = config.seed;
  r["samples"] = config.samples;
  r["tolerance"] = config.tolerance;
  bool ok = true;
  r["verdicts"] = Json::array();
  for (const Verdict& v : verdicts) {
    Json j;
    j["property"] = v.property;
    j["samples_run"] = v.samples_run;
    j["failure_count"] = v.failure_count;
    j["max_violation"] = v.max_violation;
    j["tolerance"] = v.tolerance;
    j["failures"] = Json::array();
    for (const Failure& f : v.failures) {
      Json fj;
      fj["sample"] = f.sample;
      fj["violation"] = f.violation;
      fj["message"] = f.message;
      fj["reproducer"] = f.reproducer;
      j["failures"].push_back(std::move(fj));
    }
    ok = ok && v.passed();
    r["verdicts"].push_back(std::move(j));
  }
  r["passed"] = ok;
  return r;
}

std::string report_text(const SuiteConfig& config, const std::vector<Verdict>& verdicts) {
  std::ostringstream os;
  os << "suite " << config.name << " seed " << config.seed << " samples " << config.samples << "\n";
  std::size_t failed = 0;
  for (const Verdict& v : verdicts) {
    os << (v.passed() ? "PASS " : "FAIL ") << v.property << "  samples=" << v.samples_run
       << " failures=" << v.failure_count << " max_violation=" << v.max_violation << "\n";
    for (const Failure& f : v.failures)
      os << "  sample " << f.sample << ": " << f.message << " (violation " << f.violation << ")\n";
    if (!v.passed()) ++failed;
  }
  os << (failed == 0 ? "all properties passed" : std::to_string(failed) + " properties failed") << "\n";
  return os.str();
}

}  // namespace invmetrics::verify
