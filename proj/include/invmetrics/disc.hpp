#pragma once

#include "invmetrics/foundations.hpp"

namespace invmetrics::disc {

/// A point of the open unit disc. Values with |w| >= 1 - 1e-15 are rejected.
class DiscPoint {
 public:
  explicit DiscPoint(Complex value);
  Complex value() const noexcept { return value_; }

 private:
  Complex value_;
};

/// |(z - a) / (1 - conj(a) z)|.
double mobius_distance(DiscPoint a, DiscPoint z);
double mobius_distance(Complex a, Complex z);

/// Caratheodory-Reiffen metric of the disc, |Y| / (1 - |a|^2).
double gamma_disc(DiscPoint a, Complex y);
double gamma_disc(Complex a, Complex y);

/// Value of `kind` on the unit disc with base point 0, at the point t (function
/// kinds) or in the direction t (metric kinds).
MetricValue disc_reference_value(const MetricKind& kind, double t_or_x);

/// Evaluators at an arbitrary base point of the disc. Every function kind
/// equals the Mobius distance; every even-order metric kind equals gamma.
MetricValue eval_function(const MetricKind& kind, Complex a, Complex z);
MetricValue eval_metric(const MetricKind& kind, Complex a, Complex x);

/// Disc automorphism w -> (w - c) / (1 - conj(c) w).
Complex automorphism(Complex c, Complex w);

}  // namespace invmetrics::disc
