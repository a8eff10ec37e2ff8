#include "invmetrics/reinhardt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "invmetrics/disc.hpp"

namespace invmetrics::reinhardt {

namespace {

constexpr std::int64_t kMaxDenominator = 1'000'000;

bool is_integer_value(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

// Best rational approximation p/q of x with q <= max_den by continued fractions;
// returns nullopt unless |x - p/q| is at rounding level.
std::optional<std::pair<std::int64_t, std::int64_t>> reconstruct_rational(double x,
                                                                           std::int64_t max_den) {
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double y = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(y);
    if (std::abs(a) > 9e15) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    if (std::abs(x - static_cast<double>(p2) / static_cast<double>(q2)) <= tol)
      return std::make_pair(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = y - a;
    if (frac == 0.0) break;
    y = 1.0 / frac;
  }
  return std::nullopt;
}

bool is_natural(double x) {
  const double k = std::nearbyint(x);
  return k >= 1.0 && std::abs(x - k) <= 1e-9 * std::max(1.0, std::abs(x));
}

double pow_abs(Complex z, double e) {
  const double m = std::abs(z);
  if (m == 0.0) return e > 0 ? 0.0 : (e == 0 ? 1.0 : INFINITY);
  return std::pow(m, e);
}

void require_member(const ExponentVector& alpha, const ComplexVector& a, const char* what) {
  if (a.dim() != alpha.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has dimension " + std::to_string(a.dim()) + ", expected " +
                    std::to_string(alpha.dim()));
  if (!contains(alpha, a))
    throw Error(ErrorKind::DomainViolation, std::string(what) + " is not in D_alpha");
}

const char* kSibonyZeroCitation =
    "S^(2p) vanishes identically at a when 2p*alpha_j/r(a) is not a natural "
    "number for some j in Xi(a)";

}  // namespace

ExponentVector::ExponentVector(std::vector<double> alpha, ArithmeticClass cls)
    : alpha_(std::move(alpha)), class_(cls) {
  if (alpha_.size() < 2) throw Error(ErrorKind::InvalidInput, "need n >= 2 exponents");
  for (double a : alpha_) {
    if (!std::isfinite(a) || a == 0.0)
      throw Error(ErrorKind::InvalidInput, "exponents must be finite and nonzero");
  }
  if (cls == ArithmeticClass::RelPrimeIntegers) {
    std::int64_t g = 0;
    for (double a : alpha_) {
      if (!is_integer_value(a) || std::abs(a) > 1e6)
        throw Error(ErrorKind::InvalidInput, "integer class requires integer exponents");
      int_alpha_.push_back(static_cast<int>(a));
      g = std::gcd(g, static_cast<std::int64_t>(std::abs(a)));
    }
    if (g != 1) throw Error(ErrorKind::InvalidInput, "integer exponents must be relatively prime");
  } else {
    bool all_rational = true;
    for (std::size_t j = 1; j < alpha_.size() && all_rational; ++j)
      all_rational = reconstruct_rational(alpha_[j] / alpha_[0], kMaxDenominator).has_value();
    if (all_rational)
      throw Error(ErrorKind::InvalidInput,
                  "exponent vector is a real multiple of an integer vector; use the integer class");
  }
}

bool contains(const ExponentVector& alpha, const ComplexVector& a) {
  if (a.dim() != alpha.dim()) return false;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (alpha[j] < 0 && a[j] == Complex(0.0, 0.0)) return false;
  return monomial_modulus(alpha, a) < 1.0;
}

double monomial_modulus(const ExponentVector& alpha, const ComplexVector& z) {
  if (z.dim() != alpha.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  double m = 1.0;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    if (alpha[j] < 0 && z[j] == Complex(0.0, 0.0))
      throw Error(ErrorKind::DomainViolation, "zero coordinate with negative exponent");
    m *= pow_abs(z[j], alpha[j]);
  }
  return m;
}

Complex monomial_power(const ExponentVector& alpha, const ComplexVector& z) {
  if (!alpha.is_integral()) return {monomial_modulus(alpha, z), 0.0};
  if (z.dim() != alpha.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  Complex v(1.0, 0.0);
  for (std::size_t j = 0; j < z.dim(); ++j) v *= ipow(z[j], alpha.int_at(j));
  return v;
}

PointClass classify(const ExponentVector& alpha, const ComplexVector& a) {
  require_member(alpha, a, "base point");
  PointClass pc;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (alpha[j] > 0 && a[j] == Complex(0.0, 0.0)) pc.xi.push_back(j);
  pc.sigma = pc.xi.size();
  if (pc.sigma == 0) return pc;
  if (alpha.is_integral()) {
    long long r = 0;
    int mu = alpha.int_at(pc.xi.front());
    for (auto j : pc.xi) {
      r += alpha.int_at(j);
      mu = std::min(mu, alpha.int_at(j));
    }
    pc.r = static_cast<double>(r);
    pc.mu = static_cast<double>(mu);
  } else {
    CompensatedSum r;
    double mu = alpha[pc.xi.front()];
    for (auto j : pc.xi) {
      r.add(alpha[j]);
      mu = std::min(mu, alpha[j]);
    }
    pc.r = r.value();
    pc.mu = mu;
  }
  return pc;
}

TaylorCoefficient taylor_lowest_coefficient(const ExponentVector& alpha, const ComplexVector& a,
                                            const ComplexVector& x) {
  if (!alpha.is_integral())
    throw Error(ErrorKind::InvalidInput, "Taylor coefficient needs integer exponents");
  const PointClass pc = classify(alpha, a);
  if (x.dim() != alpha.dim()) throw Error(ErrorKind::DimensionMismatch, "direction dimension");
  if (pc.sigma == 0) {
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < a.dim(); ++j) s += static_cast<double>(alpha.int_at(j)) * x[j] / a[j];
    return {monomial_power(alpha, a) * s, 1.0};
  }
  Complex c(1.0, 0.0);
  std::size_t next = 0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const bool in_xi = next < pc.xi.size() && pc.xi[next] == j;
    if (in_xi) {
      c *= ipow(x[j], alpha.int_at(j));
      ++next;
    } else {
      c *= ipow(a[j], alpha.int_at(j));
    }
  }
  return {c, pc.r};
}

MetricValue eval_function(const ExponentVector& alpha, const MetricKind& kind,
                          const ComplexVector& a, const ComplexVector& z) {
  if (!kind.is_function())
    throw Error(ErrorKind::UnsupportedKind, kind.name() + " is a metric; use eval_metric");
  const PointClass pc = classify(alpha, a);
  require_member(alpha, z, "target point");

  double m = 0.0;
  double g = 0.0;
  double s2 = 0.0;
  if (alpha.is_integral()) {
    m = disc::mobius_distance(monomial_power(alpha, a), monomial_power(alpha, z));
    g = pc.sigma == 0 ? m : std::pow(m, 1.0 / pc.r);
    s2 = pc.sigma == 0 ? m : std::pow(monomial_modulus(alpha, z), 1.0 / *pc.mu);
  } else {
    const double mod = monomial_modulus(alpha, z);
    m = 0.0;
    g = pc.sigma == 0 ? 0.0 : std::pow(mod, 1.0 / pc.r);
    s2 = pc.sigma == 0 ? 0.0 : std::pow(mod, 1.0 / *pc.mu);
  }

  switch (kind.tag()) {
    case MetricKind::Tag::Mobius: return metric_value_exact(m);
    case MetricKind::Tag::Green: return metric_value_exact(g);
    case MetricKind::Tag::SibonyFunction:
      if (kind.order() == 2) return metric_value_exact(s2);
      if (pc.sigma <= 1) return metric_value_exact(g);
      return metric_value_bounds(m, g, ValueStatus::Unknown);
    default: break;
  }
  throw Error(ErrorKind::UnsupportedKind, kind.name());
}

MetricValue eval_metric(const ExponentVector& alpha, const MetricKind& kind,
                        const ComplexVector& a, const ComplexVector& x) {
  if (kind.is_function())
    throw Error(ErrorKind::UnsupportedKind, kind.name() + " is a function; use eval_function");
  if (kind.tag() == MetricKind::Tag::SibonyMetric && kind.order() % 2 != 0)
    throw Error(ErrorKind::InvalidOrder, "Sibony metric order must be even");
  const PointClass pc = classify(alpha, a);
  if (x.dim() != alpha.dim()) throw Error(ErrorKind::DimensionMismatch, "direction dimension");

  double gamma = 0.0;
  double azukawa = 0.0;
  if (alpha.is_integral()) {
    const TaylorCoefficient tc = taylor_lowest_coefficient(alpha, a, x);
    const Complex a_alpha = monomial_power(alpha, a);
    azukawa = std::pow(disc::gamma_disc(a_alpha, tc.coefficient), 1.0 / tc.order);
    gamma = tc.order == 1.0 ? disc::gamma_disc(a_alpha, tc.coefficient) : 0.0;
  } else if (pc.sigma >= 1) {
    double prod = 1.0;
    std::size_t next = 0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const bool in_xi = next < pc.xi.size() && pc.xi[next] == j;
      prod *= pow_abs(in_xi ? x[j] : a[j], alpha[j]);
      if (in_xi) ++next;
    }
    azukawa = std::pow(prod, 1.0 / pc.r);
  }

  switch (kind.tag()) {
    case MetricKind::Tag::Caratheodory: return metric_value_exact(gamma);
    case MetricKind::Tag::Azukawa: return metric_value_exact(azukawa);
    case MetricKind::Tag::SibonyMetric: {
      const int two_p = kind.order();
      if (two_p == 2) {
        const bool equals_a = alpha.is_integral() ? pc.sigma <= 1 : pc.sigma == 1;
        return metric_value_exact(equals_a ? azukawa : 0.0);
      }
      if (pc.sigma <= 1) return metric_value_exact(azukawa);
      const int p = two_p / 2;
      bool all_p = true;
      bool some_2p_fails = false;
      for (auto j : pc.xi) {
        if (!is_natural(p * alpha[j] / pc.r)) all_p = false;
        if (!is_natural(two_p * alpha[j] / pc.r)) some_2p_fails = true;
      }
      if (all_p) return metric_value_exact(azukawa);
      if (some_2p_fails) return metric_value_proven(0.0, kSibonyZeroCitation);
      return metric_value_bounds(gamma, azukawa, ValueStatus::Unknown);
    }
    default: break;
  }
  throw Error(ErrorKind::UnsupportedKind, kind.name());
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool in_exclusion_set(Rational q, int p) {
  if (q.num <= 0) throw Error(ErrorKind::InvalidInput, "q must be positive");
  if (p < 1) throw Error(ErrorKind::InvalidInput, "p must be >= 1");
  for (std::int64_t k = 1; k <= 2 * p - 1; ++k) {
    // q = (2p - k) / k  <=>  num * k == den * (2p - k)
    if (q.num * k == q.den * (2 * p - k)) return true;
  }
  return false;
}

bool in_exclusion_set(std::span<const double> alpha, std::size_t s, int p) {
  if (p < 1) throw Error(ErrorKind::InvalidInput, "p must be >= 1");
  if (s >= alpha.size()) throw Error(ErrorKind::InvalidInput, "need s < n");
  CompensatedSum tail;
  for (std::size_t j = s; j < alpha.size(); ++j) {
    if (!(alpha[j] > 0)) throw Error(ErrorKind::InvalidInput, "vanishing block needs alpha_j > 0");
    tail.add(alpha[j]);
  }
  const double t = tail.value();
  for (std::size_t j = s; j < alpha.size(); ++j) {
    for (int k = 1; k <= 2 * p - 1; ++k) {
      const double lhs = 2.0 * p * alpha[j];
      const double rhs = k * t;
      if (std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs)) return true;
    }
  }
  return false;
}

}  // namespace invmetrics::reinhardt
