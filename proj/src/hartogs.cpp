#include "invmetrics/hartogs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace invmetrics::hartogs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLn2 = 0.69314718055994530942;
constexpr std::size_t kExam3DefaultTruncation = 10000;
constexpr double kExam3MinModulus = 1e-5;

// Smallest L >= 0 with x * 2^L an integer.
int dyadic_exponent(double x) {
  for (int L = 0; L < 1100; ++L) {
    const double y = std::ldexp(x, L);
    if (y == std::nearbyint(y)) return L;
  }
  return 1100;
}

bool is_zero(Complex z) { return z == Complex(0.0, 0.0); }

// ---------------------------------------------------------------------------
// Exam1 series

double exam1_tail_bound(std::size_t K, double U, double abs_eta, int L) {
  const double pow2 = std::ldexp(1.0, -static_cast<int>(K));
  const double Kd = static_cast<double>(K);
  if (abs_eta > 0.0) {
    const double E = std::max(0.0, -std::log(abs_eta));
    return (U + E + Kd + 2.0) * pow2;
  }
  return (U + 2.0 * L * kLn2) * pow2 + (2.0 * kLn2 + 1.0) * (Kd + 2.0) * pow2;
}

PhiValue exam1_phi(const Exam1Series& spec, Complex xi, Complex eta) {
  const double abs_eta = std::abs(eta);
  const double abs_xi = std::abs(xi);
  if (abs_eta == 0.0 && abs_xi < 1.0 && !is_zero(xi))
    throw Error(ErrorKind::SingularPoint,
                "eta = 0 and xi is a nonzero dyadic point of the disc: phi = -infinity");
  const double U = std::max(0.0, std::log((abs_xi + 1.0) * (abs_xi + 1.0) + abs_eta));
  const int L = std::max(dyadic_exponent(xi.real()), dyadic_exponent(xi.imag()));

  std::size_t K = spec.truncation;
  if (K == 0) {
    if (!(spec.tail_tolerance > 0)) throw Error(ErrorKind::InvalidInput, "tail tolerance must be > 0");
    K = 1;
    while (exam1_tail_bound(K, U, abs_eta, L) > 0.5 * spec.tail_tolerance) {
      if (++K > 4000) throw Error(ErrorKind::InvalidInput, "tail tolerance unreachable");
    }
  }
  const auto seq = dense_sequence(K);
  CompensatedSum sum;
  for (std::size_t k = 1; k <= K; ++k) {
    const double q = std::norm(xi - seq[k - 1]) + abs_eta;
    if (q < 1e-28) throw Error(ErrorKind::SingularPoint, "point within 1e-14 of a_k");
    sum.add(std::ldexp(std::log(q / static_cast<double>(k)), -static_cast<int>(k)));
  }
  const double rounding = 4.0 * kEps * (sum.abs_total() + 4.0);
  return {sum.value(), exam1_tail_bound(K, U, abs_eta, L) + rounding};
}

// ---------------------------------------------------------------------------
// Exam3 series

struct Bracket {
  double mid;
  double half;
};

// sum_{s > K} log(s) / s^2, bracketed by convexity (K >= 3):
//   int_{K+1}^inf f + f(K+1)/2 <= sum <= int_{K+1/2}^inf f,
// with int_a^inf log(x)/x^2 dx = (log a + 1) / a.
Bracket log_tail(double K) {
  auto integral = [](double a) { return (std::log(a) + 1.0) / a; };
  const double f = std::log(K + 1.0) / ((K + 1.0) * (K + 1.0));
  const double lo = integral(K + 1.0) + 0.5 * f;
  const double hi = integral(K + 0.5);
  return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

// (K+1)^q * sum_{s > K} s^-q, bracketed the same way.
Bracket scaled_power_tail(double K, int q) {
  const double lo = (K + 1.0) / (q - 1) + 0.5;
  const double hi = (K + 1.0) * std::pow((K + 0.5) / (K + 1.0), 1 - q) / (q - 1);
  return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

PhiValue exam3_phi(const Exam3Series& spec, Complex lambda) {
  const double r = std::abs(lambda);
  if (!(r < 0.5)) throw Error(ErrorKind::RegionViolation, "phi_k is defined on |lambda| < 1/2");

  auto direct = [&](std::size_t last) {
    CompensatedSum sum;
    for (std::size_t s = 2; s <= last; ++s) {
      const double sd = static_cast<double>(s);
      const double d = std::abs(lambda - 1.0 / sd);
      if (d < 1e-14) throw Error(ErrorKind::SingularPoint, "lambda within 1e-14 of 1/s");
      sum.add(std::log(d) / (sd * sd));
    }
    return sum;
  };

  if (spec.k) {
    if (*spec.k < 2) throw Error(ErrorKind::InvalidInput, "partial sum index k must be >= 2");
    const CompensatedSum s = direct(static_cast<std::size_t>(*spec.k));
    return {s.value(), 8.0 * kEps * (s.abs_total() + 1.0)};
  }

  std::size_t K = spec.truncation == 0 ? kExam3DefaultTruncation : spec.truncation;
  K = std::max<std::size_t>(K, 3);
  if (r == 0.0) {
    const CompensatedSum s = direct(K);
    const Bracket t = log_tail(static_cast<double>(K));
    return {s.value() - t.mid, t.half + 8.0 * kEps * (s.abs_total() + 1.0)};
  }
  if (r < kExam3MinModulus)
    throw Error(ErrorKind::RegionViolation,
                "full series is certified only at lambda = 0 or |lambda| >= 1e-5");
  K = std::max<std::size_t>(K, static_cast<std::size_t>(std::ceil(4.0 / r)));
  const CompensatedSum s = direct(K);

  // For s > K, log|lambda - 1/s| = log|lambda| + log|1 - w_s| with
  // w_s = 1/(s lambda), |w_s| <= 1/4, and log|1 - w| = -Re sum_m w^m / m.
  const double Kd = static_cast<double>(K);
  const double inv_k1_sq = 1.0 / ((Kd + 1.0) * (Kd + 1.0));
  const Bracket z2 = scaled_power_tail(Kd, 2);
  double tail = std::log(r) * z2.mid * inv_k1_sq;
  double err = std::abs(std::log(r)) * z2.half * inv_k1_sq;
  const Complex w0 = 1.0 / (lambda * (Kd + 1.0));
  Complex wm(1.0, 0.0);
  constexpr int kTerms = 30;
  for (int m = 1; m <= kTerms; ++m) {
    wm *= w0;
    const Bracket zq = scaled_power_tail(Kd, m + 2);
    tail -= wm.real() / m * zq.mid * inv_k1_sq;
    err += std::abs(wm) / m * zq.half * inv_k1_sq;
  }
  err += (4.0 / 3.0) / (kTerms + 1) * std::pow(0.25, kTerms + 1) * (z2.mid + z2.half) * inv_k1_sq;
  return {s.value() + tail, err + 8.0 * kEps * (s.abs_total() + std::abs(tail) + 1.0)};
}

// ---------------------------------------------------------------------------

Membership classify_fiber(double modulus, const PhiValue& phi) {
  if (modulus == 0.0) return Membership::Inside;
  const double lo = std::log(modulus) + phi.value - phi.certified_error;
  const double hi = std::log(modulus) + phi.value + phi.certified_error;
  if (hi < 0.0) return Membership::Inside;
  if (lo >= 0.0) return Membership::Outside;
  return Membership::Indeterminate;
}

PhiValue domain_phi(const HartogsDomain& d, const ComplexVector& z) {
  switch (d.variant) {
    case HartogsDomain::Variant::Exam1G: return exam1_phi(d.exam1_series, z[1], z[2]);
    case HartogsDomain::Variant::Exam1D: return exam1_phi(d.exam1_series, z[1], Complex(0.0, 0.0));
    case HartogsDomain::Variant::Exam3Gk: return exam3_phi(Exam3Series{d.k, 0}, z[0]);
    case HartogsDomain::Variant::Exam3G:
      return exam3_phi(Exam3Series{std::nullopt, d.exam3_truncation}, z[0]);
  }
  throw Error(ErrorKind::InvalidInput, "unknown Hartogs variant");
}

double fiber_coordinate(const HartogsDomain& d, const ComplexVector& z) {
  return d.variant == HartogsDomain::Variant::Exam3Gk || d.variant == HartogsDomain::Variant::Exam3G
             ? std::abs(z[1])
             : std::abs(z[0]);
}

bool is_exam3(const HartogsDomain& d) {
  return d.variant == HartogsDomain::Variant::Exam3Gk || d.variant == HartogsDomain::Variant::Exam3G;
}

void require_dim(const HartogsDomain& d, const ComplexVector& z, const char* what) {
  if (z.dim() != d.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must have dimension " + std::to_string(d.dim()));
}

void require_inside(const HartogsDomain& d, const ComplexVector& z, const char* what) {
  require_dim(d, z, what);
  const Membership m = membership(d, z);
  if (m == Membership::Outside)
    throw Error(ErrorKind::DomainViolation, std::string(what) + " is outside the domain");
  if (m == Membership::Indeterminate)
    throw Error(ErrorKind::DomainViolation,
                std::string(what) + " is within the certified error of the boundary");
}

const char* kExam1Citation =
    "every candidate at the origin of the Exam1 Hartogs domain vanishes on "
    "{z_3 = 0}: s^(p)(0,(b,0,0)) = 0 and S^(2p)(0;(1,0,0)) = 0";
const char* kExam6GammaCitation =
    "Liouville plus density of (a_k): every bounded holomorphic f vanishing at 0 "
    "vanishes on {(z_1,0,0)}, so gamma(0;(1,0,0)) = 0";
const char* kExam6ACitation =
    "candidate |z_1| e^{phi(z_2,z_3)} gives S^(2p)(c_t;X) >= e^{phi(0,t)}|X_1| and the "
    "disc lambda -> (lambda,0,t) gives A(c_t;X) <= e^{phi(0,t)}|X_1|";
const char* kSliceCitation =
    "on the slice domain every candidate with base in C x D is constant along "
    "C x {a_k} and {0} x C, hence vanishes: s^(p) = 0 and S^(2p) = 0";
const char* kExam3Citation =
    "candidates on G are constant on {1/s} x C and continuous at 0, so "
    "s^(p)((0,0),(0,z_2)) = 0 for |z_2| < e^{phi(0)} and S^(p)((0,0);(0,X_2)) = 0";

}  // namespace

std::vector<Complex> dense_sequence(std::size_t count) {
  static std::mutex mu;
  static std::vector<Complex> cache;
  static int level = 0;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() < count) {
    ++level;
    const long long side = 1LL << level;
    const double h = std::ldexp(1.0, -level);
    for (long long i = -side + 1; i < side; ++i) {
      for (long long j = -side + 1; j < side; ++j) {
        if (i % 2 == 0 && j % 2 == 0) continue;
        if (i * i + j * j >= side * side) continue;
        cache.emplace_back(static_cast<double>(i) * h, static_cast<double>(j) * h);
      }
    }
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

PhiValue phi_eval(const PhiSeriesSpec& spec, const ComplexVector& point) {
  return std::visit(
      [&](const auto& s) -> PhiValue {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Exam1Series>) {
          if (point.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "Exam1 phi takes (xi, eta)");
          return exam1_phi(s, point[0], point[1]);
        } else {
          if (point.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "Exam3 phi takes (lambda)");
          return exam3_phi(s, point[0]);
        }
      },
      spec);
}

HartogsDomain HartogsDomain::exam3(std::optional<int> k) {
  HartogsDomain d;
  if (k) {
    if (*k < 2) throw Error(ErrorKind::InvalidInput, "G_k needs k >= 2");
    d.variant = Variant::Exam3Gk;
    d.k = *k;
  } else {
    d.variant = Variant::Exam3G;
  }
  return d;
}

Membership membership(const HartogsDomain& d, const ComplexVector& z) {
  require_dim(d, z, "point");
  if (is_exam3(d) && !(std::abs(z[0]) < 0.5)) return Membership::Outside;
  const double fiber = fiber_coordinate(d, z);
  if (fiber == 0.0) return Membership::Inside;
  try {
    return classify_fiber(fiber, domain_phi(d, z));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularPoint && e.kind() != ErrorKind::RegionViolation) throw;
    // phi = -infinity exactly on {eta = 0, xi a nonzero dyadic point of the disc}
    const bool exact_pole =
        (d.variant == HartogsDomain::Variant::Exam1G && is_zero(z[2]) && std::abs(z[1]) < 1.0) ||
        d.variant == HartogsDomain::Variant::Exam1D;
    if (e.kind() == ErrorKind::SingularPoint && exact_pole && std::abs(z[1]) < 1.0 && !is_zero(z[1]))
      return Membership::Inside;
    return Membership::Indeterminate;
  }
}

CandidateFunction make_candidate(const HartogsDomain& d, const ComplexVector& base,
                                 const MetricKind& kind, double eps) {
  if (kind.tag() != MetricKind::Tag::SibonyFunction && kind.tag() != MetricKind::Tag::SibonyMetric)
    throw Error(ErrorKind::UnsupportedKind, "candidates bound Sibony functions and metrics only");
  if (!(eps >= 0) || !std::isfinite(eps)) throw Error(ErrorKind::InvalidInput, "eps must be >= 0");
  require_dim(d, base, "base point");
  const int p = kind.order();
  const double exponent = kind.is_function() ? 1.0 + eps / p : 1.0;

  CandidateFunction c;
  c.base = base;
  c.order = p;
  c.eps = kind.is_function() ? eps : 0.0;
  c.family = CandidateFunction::Family::MonomialHartogs;
  if (d.variant == HartogsDomain::Variant::Exam1G) {
    if (!is_zero(base[0]) || !is_zero(base[1]) || is_zero(base[2]))
      throw Error(ErrorKind::InvalidBase, "Exam1 candidates are based at c_t = (0, 0, t), t != 0");
    HartogsDomain dom = d;
    c.evaluator = [dom, exponent](const ComplexVector& z) {
      if (is_zero(z[0])) return 0.0;
      PhiValue phi;
      try {
        phi = exam1_phi(dom.exam1_series, z[1], z[2]);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularPoint && is_zero(z[2])) return 0.0;
        throw;
      }
      return std::pow(std::abs(z[0]) * std::exp(phi.value - phi.certified_error), exponent);
    };
    return c;
  }
  if (d.variant == HartogsDomain::Variant::Exam3Gk) {
    if (!is_zero(base[0]) || !is_zero(base[1]))
      throw Error(ErrorKind::InvalidBase, "G_k candidates are based at the origin");
    const int k = d.k;
    c.evaluator = [k, exponent](const ComplexVector& z) {
      if (is_zero(z[1])) return 0.0;
      const PhiValue phi = exam3_phi(Exam3Series{k, 0}, z[0]);
      return std::pow(std::abs(z[1]) * std::exp(phi.value - phi.certified_error), exponent);
    };
    return c;
  }
  throw Error(ErrorKind::InvalidBase, "no candidate function is available for this domain");
}

double candidate_lower_bound(const HartogsDomain& d, const ComplexVector& base,
                             const MetricKind& kind, const ComplexVector& v, double eps) {
  const CandidateFunction c = make_candidate(d, base, kind, eps);
  require_dim(d, v, kind.is_function() ? "target point" : "direction");
  if (kind.is_function()) {
    require_inside(d, base, "base point");
    require_inside(d, v, "target point");
    return c(v);
  }
  if (kind.order() % 2 == 1) return 0.0;
  // limsup_{lambda -> 0} v(base + lambda X) / |lambda| in closed form: the
  // fiber coordinate vanishes at the base and phi is continuous there.
  require_inside(d, base, "base point");
  if (d.variant == HartogsDomain::Variant::Exam1G) {
    const PhiValue phi = exam1_phi(d.exam1_series, base[1], base[2]);
    return std::abs(v[0]) * std::exp(phi.value - phi.certified_error);
  }
  const PhiValue phi = exam3_phi(Exam3Series{d.k, 0}, base[0]);
  return std::abs(v[1]) * std::exp(phi.value - phi.certified_error);
}

MetricValue proven_value(const HartogsDomain& d, const MetricKind& kind, const ComplexVector& base,
                         const ComplexVector& v) {
  require_inside(d, base, "base point");
  require_dim(d, v, kind.is_function() ? "target point" : "direction");
  if (kind.is_function()) require_inside(d, v, "target point");

  if (kind.tag() == MetricKind::Tag::SibonyMetric && kind.order() % 2 == 1)
    return metric_value_proven(0.0, "odd-order Sibony pseudometrics vanish identically");

  const bool base_zero = std::all_of(base.entries().begin(), base.entries().end(), is_zero);
  const bool sibony_fn = kind.tag() == MetricKind::Tag::SibonyFunction;
  const bool sibony_metric = kind.tag() == MetricKind::Tag::SibonyMetric;

  switch (d.variant) {
    case HartogsDomain::Variant::Exam1G: {
      const bool on_first_axis = is_zero(v[1]) && is_zero(v[2]);
      if (base_zero && on_first_axis &&
          (sibony_fn || sibony_metric || kind.tag() == MetricKind::Tag::Caratheodory))
        return metric_value_proven(0.0, kind.tag() == MetricKind::Tag::Caratheodory
                                            ? kExam6GammaCitation
                                            : kExam1Citation);
      const bool at_ct = is_zero(base[0]) && is_zero(base[1]) && base[2].imag() == 0.0 &&
                         base[2].real() > 0.0;
      if (at_ct && on_first_axis && (sibony_metric || kind.tag() == MetricKind::Tag::Azukawa)) {
        const PhiValue phi = exam1_phi(d.exam1_series, Complex(0.0, 0.0), base[2]);
        const double value = std::abs(v[0]) * std::exp(phi.value);
        const double err = std::abs(v[0]) * std::exp(phi.value) * std::expm1(phi.certified_error);
        return metric_value_proven(value, kExam6ACitation, err);
      }
      break;
    }
    case HartogsDomain::Variant::Exam1D:
      if (std::abs(base[1]) < 1.0 && (sibony_fn || sibony_metric))
        return metric_value_proven(0.0, kSliceCitation);
      break;
    case HartogsDomain::Variant::Exam3G:
      if (base_zero && is_zero(v[0]) && (sibony_fn || sibony_metric)) {
        if (sibony_fn) {
          const PhiValue phi0 = exam3_phi(Exam3Series{}, Complex(0.0, 0.0));
          if (!(std::abs(v[1]) < std::exp(phi0.value - phi0.certified_error))) break;
        }
        return metric_value_proven(0.0, kExam3Citation);
      }
      break;
    case HartogsDomain::Variant::Exam3Gk: break;
  }
  throw Error(ErrorKind::NotProven, "no proven value for " + kind.name() + " at this query");
}

std::vector<FamilyRow> increasing_family_table(int k_max, Complex z2, int p) {
  if (k_max < 2) throw Error(ErrorKind::InvalidInput, "k_max must be >= 2");
  if (p < 1) throw Error(ErrorKind::InvalidInput, "p must be >= 1");
  const PhiValue phi0 = exam3_phi(Exam3Series{}, Complex(0.0, 0.0));
  const double radius = std::exp(phi0.value - phi0.certified_error);
  if (!(std::abs(z2) > 0.0 && std::abs(z2) < radius))
    throw Error(ErrorKind::InvalidInput, "need 0 < |z2| < e^{phi(0)}");

  const ComplexVector origin{Complex(0.0, 0.0), Complex(0.0, 0.0)};
  const ComplexVector target{Complex(0.0, 0.0), z2};
  const MetricValue proven =
      proven_value(HartogsDomain::exam3(), MetricKind::sibony_function(p), origin, target);

  std::vector<FamilyRow> rows;
  CompensatedSum partial;
  for (int k = 2; k <= k_max; ++k) {
    const PhiValue phik = exam3_phi(Exam3Series{k, 0}, Complex(0.0, 0.0));
    FamilyRow row;
    row.k = k;
    row.phi_k0 = phik.value;
    row.exp_phi_k0 = std::exp(phik.value);
    row.lower_bound = candidate_lower_bound(HartogsDomain::exam3(k), origin,
                                            MetricKind::sibony_function(p), target, 0.0);
    row.limit_value = std::abs(z2) * std::exp(phi0.value);
    row.proven_g_value = proven.value();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace invmetrics::hartogs
