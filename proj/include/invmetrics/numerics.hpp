#pragma once

#include <functional>

#include "invmetrics/foundations.hpp"

namespace invmetrics::numerics {

enum class Trend { Increasing, Stable, Decreasing };

const char* to_string(Trend t);

/// Samples lambda -> f(lambda) on the polar grid lambda = r_m e^{i theta_j},
/// r_m = r0 rho^m, theta_j = 2 pi j / angles.
struct CurveSampler {
  std::function<double(Complex)> evaluator;
  double r0 = 1e-2;
  double rho = 0.5;
  int levels = 16;
  int angles = 32;
  /// Optional predicate on lambda; every grid point must satisfy it.
  std::function<bool(Complex)> membership;
  /// Relative drift of the extrapolated maximum tolerated as Stable.
  double stable_tolerance = 1e-6;
};

/// lambda -> f(a + lambda X).
CurveSampler along_line(std::function<double(const ComplexVector&)> f, const ComplexVector& a,
                        const ComplexVector& x);

struct LimsupResult {
  double estimate;
  Trend trend;
};

/// limsup_{lambda -> 0} f(lambda) / |lambda|: per angle, the radial quotient
/// sequence is Aitken-extrapolated; the estimate is the maximum over angles.
/// Throws NonFiniteSample, DomainViolation (grid point outside membership) and
/// NoConvergence unless the trend is Stable.
LimsupResult limsup_quotient(const CurveSampler& c);

/// Same as limsup_quotient but reports the trend instead of throwing.
LimsupResult limsup_quotient_unchecked(const CurveSampler& c);

struct LeviStencil {
  double h = 1e-4;
};

/// (u(a+hX) + u(a-hX) + u(a+ihX) + u(a-ihX) - 4u(a)) / (4h^2).
/// Throws StepTooSmall when more than half the significant digits cancel and
/// the result disagrees with the step 2h.
double levi_form(const std::function<double(const ComplexVector&)>& u, const ComplexVector& a,
                 const ComplexVector& x, const LeviStencil& stencil = {});

/// Least-squares slope of log u(a + tX) against log t for t in [1e-3, 1e-2],
/// rounded when within 0.1 of an integer.
double order_of_vanishing(const std::function<double(const ComplexVector&)>& u,
                          const ComplexVector& a, const ComplexVector& x);

/// Extrapolated lim_{t -> 0+} u(a + tX) / t^p.
double taylor_p_coefficient(const std::function<double(const ComplexVector&)>& u,
                            const ComplexVector& a, const ComplexVector& x, int p);

}  // namespace invmetrics::numerics
