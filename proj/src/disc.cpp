#include "invmetrics/disc.hpp"

#include <cmath>

namespace invmetrics::disc {

namespace {
constexpr double kInteriorMargin = 1e-15;
constexpr const char* kOddOrderCitation =
    "odd-order Sibony pseudometrics vanish identically (p-th differential of a "
    "nonnegative function with a zero of order p, p odd)";
}  // namespace

DiscPoint::DiscPoint(Complex value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      std::abs(value) >= 1.0 - kInteriorMargin)
    throw Error(ErrorKind::DomainViolation, "point not strictly inside the unit disc");
}

double mobius_distance(DiscPoint a, DiscPoint z) {
  const Complex av = a.value();
  const Complex zv = z.value();
  return std::abs(zv - av) / std::abs(1.0 - std::conj(av) * zv);
}

double mobius_distance(Complex a, Complex z) { return mobius_distance(DiscPoint(a), DiscPoint(z)); }

double gamma_disc(DiscPoint a, Complex y) {
  return std::abs(y) / (1.0 - std::norm(a.value()));
}

double gamma_disc(Complex a, Complex y) { return gamma_disc(DiscPoint(a), y); }

Complex automorphism(Complex c, Complex w) { return (w - c) / (1.0 - std::conj(c) * w); }

MetricValue disc_reference_value(const MetricKind& kind, double t) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::InvalidValue, "t must be >= 0");
  if (kind.is_function()) {
    if (t >= 1.0) throw Error(ErrorKind::DomainViolation, "t must lie in [0,1)");
    return metric_value_exact(t);
  }
  if (kind.tag() == MetricKind::Tag::SibonyMetric && kind.order() % 2 == 1)
    return metric_value_proven(0.0, kOddOrderCitation);
  return metric_value_exact(t);
}

MetricValue eval_function(const MetricKind& kind, Complex a, Complex z) {
  if (!kind.is_function()) throw Error(ErrorKind::UnsupportedKind, kind.name() + " is a metric");
  return metric_value_exact(mobius_distance(a, z));
}

MetricValue eval_metric(const MetricKind& kind, Complex a, Complex x) {
  if (kind.is_function()) throw Error(ErrorKind::UnsupportedKind, kind.name() + " is a function");
  if (kind.tag() == MetricKind::Tag::SibonyMetric && kind.order() % 2 == 1) {
    DiscPoint{a};
    return metric_value_proven(0.0, kOddOrderCitation);
  }
  return metric_value_exact(gamma_disc(a, x));
}

}  // namespace invmetrics::disc
