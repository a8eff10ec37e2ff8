#include "invmetrics/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace invmetrics::numerics {

namespace {

// Aitken extrapolation of q0, q1, q2 (coarse to fine) assuming a geometric
// correction. Falls back to q2 when the differences are not geometric.
double aitken(double q0, double q1, double q2) {
  const double d1 = q1 - q0;
  const double d2 = q2 - q1;
  if (std::abs(d2) <= 1e-13 * std::max(std::abs(q2), 1e-300)) return q2;
  if (d1 == 0.0) return q2;
  const double t = d2 / d1;
  if (!(t > 0.0 && t < 0.95)) return q2;
  return q2 + d2 * t / (1.0 - t);
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteSample, std::string("non-finite ") + what);
  return v;
}

void validate(const CurveSampler& c) {
  if (!c.evaluator) throw Error(ErrorKind::InvalidInput, "sampler has no evaluator");
  if (!(c.r0 > 0.0 && c.r0 <= 1e-1)) throw Error(ErrorKind::InvalidInput, "r0 must lie in (0, 0.1]");
  if (!(c.rho > 0.0 && c.rho < 1.0)) throw Error(ErrorKind::InvalidInput, "rho must lie in (0, 1)");
  if (c.angles < 8) throw Error(ErrorKind::InvalidInput, "need at least 8 angles");
  if (c.levels < 4) throw Error(ErrorKind::InvalidInput, "need at least 4 radius levels");
  if (!(c.stable_tolerance > 0.0)) throw Error(ErrorKind::InvalidInput, "stable tolerance must be > 0");
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys, double* rms) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  if (rms) {
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (my + slope * (xs[i] - mx));
      ss += r * r;
    }
    *rms = std::sqrt(ss / n);
  }
  return slope;
}

constexpr int kFitPoints = 11;

}  // namespace

const char* to_string(Trend t) {
  switch (t) {
    case Trend::Increasing: return "Increasing";
    case Trend::Stable: return "Stable";
    case Trend::Decreasing: return "Decreasing";
  }
  return "?";
}

CurveSampler along_line(std::function<double(const ComplexVector&)> f, const ComplexVector& a,
                        const ComplexVector& x) {
  if (a.dim() != x.dim()) throw Error(ErrorKind::DimensionMismatch, "base and direction differ in dimension");
  CurveSampler c;
  c.evaluator = [f = std::move(f), a, x](Complex lambda) { return f(a + x * lambda); };
  return c;
}

LimsupResult limsup_quotient_unchecked(const CurveSampler& c) {
  validate(c);
  const int L = c.levels;
  double best_last = -std::numeric_limits<double>::infinity();
  double best_prev = -std::numeric_limits<double>::infinity();
  std::vector<double> q(static_cast<std::size_t>(L));
  for (int j = 0; j < c.angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / c.angles;
    const Complex dir = std::polar(1.0, theta);
    double r = c.r0;
    for (int m = 0; m < L; ++m, r *= c.rho) {
      const Complex lambda = r * dir;
      if (c.membership && !c.membership(lambda))
        throw Error(ErrorKind::DomainViolation, "grid point outside the domain");
      q[m] = checked(c.evaluator(lambda), "sample") / r;
    }
    best_last = std::max(best_last, aitken(q[L - 3], q[L - 2], q[L - 1]));
    best_prev = std::max(best_prev, aitken(q[L - 4], q[L - 3], q[L - 2]));
  }
  const double drift = best_last - best_prev;
  const double scale = std::max(std::abs(best_last), 1e-12);
  Trend trend = Trend::Stable;
  if (std::abs(drift) > c.stable_tolerance * scale) trend = drift > 0 ? Trend::Increasing : Trend::Decreasing;
  return {best_last, trend};
}

LimsupResult limsup_quotient(const CurveSampler& c) {
  const LimsupResult res = limsup_quotient_unchecked(c);
  if (res.trend != Trend::Stable)
    throw Error(ErrorKind::NoConvergence,
                std::string("limsup quotient still ") + to_string(res.trend) + " at the finest radius");
  return res;
}

double levi_form(const std::function<double(const ComplexVector&)>& u, const ComplexVector& a,
                 const ComplexVector& x, const LeviStencil& stencil) {
  const double h = stencil.h;
  if (!(h >= 1e-6 && h <= 1e-2)) throw Error(ErrorKind::InvalidInput, "step must lie in [1e-6, 1e-2]");
  if (a.dim() != x.dim()) throw Error(ErrorKind::DimensionMismatch, "base and direction differ in dimension");
  const double u0 = checked(u(a), "value");
  auto numerator = [&](double step, double* magnitude) {
    const Complex offsets[] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
    double sum = 0.0;
    double mag = std::abs(u0);
    for (const Complex& o : offsets) {
      const double v = checked(u(a + x * o), "value");
      sum += v;
      mag = std::max(mag, std::abs(v));
    }
    if (magnitude) *magnitude = mag;
    return sum - 4.0 * u0;
  };
  double mag = 0.0;
  const double n1 = numerator(h, &mag);
  const double l1 = n1 / (4.0 * h * h);
  if (std::abs(n1) < 1e-8 * mag) {
    const double l2 = numerator(2.0 * h, nullptr) / (16.0 * h * h);
    if (std::abs(l1 - l2) > 1e-6 * std::max(std::abs(l2), 1e-300))
      throw Error(ErrorKind::StepTooSmall, "cancellation in the Levi stencil; increase the step");
  }
  return l1;
}

double order_of_vanishing(const std::function<double(const ComplexVector&)>& u,
                          const ComplexVector& a, const ComplexVector& x) {
  if (a.dim() != x.dim()) throw Error(ErrorKind::DimensionMismatch, "base and direction differ in dimension");
  std::vector<double> lt, lu;
  for (int i = 0; i < kFitPoints; ++i) {
    const double t = std::pow(10.0, -3.0 + static_cast<double>(i) / (kFitPoints - 1));
    const double v = u(a + x * Complex(t, 0.0));
    if (!std::isfinite(v) || !(v > 0.0))
      throw Error(ErrorKind::Undetermined, "u is not positive along the sampled segment");
    lt.push_back(std::log(t));
    lu.push_back(std::log(v));
  }
  double rms = 0.0;
  const double slope = slope_fit(lt, lu, &rms);
  if (rms > 0.05) throw Error(ErrorKind::Undetermined, "log-log fit residual too large");
  const double rounded = std::round(slope);
  return std::abs(slope - rounded) <= 0.1 ? rounded : slope;
}

double taylor_p_coefficient(const std::function<double(const ComplexVector&)>& u,
                            const ComplexVector& a, const ComplexVector& x, int p) {
  if (p < 1) throw Error(ErrorKind::InvalidOrder, "p must be >= 1");
  if (a.dim() != x.dim()) throw Error(ErrorKind::DimensionMismatch, "base and direction differ in dimension");
  auto quotient = [&](double t) { return checked(u(a + x * Complex(t, 0.0)), "value") / std::pow(t, p); };

  std::vector<double> lt, lq;
  bool all_zero = true;
  for (int i = 0; i < kFitPoints; ++i) {
    const double t = std::pow(10.0, -3.0 + static_cast<double>(i) / (kFitPoints - 1));
    const double qv = quotient(t);
    if (qv != 0.0) all_zero = false;
    if (qv > 0.0) {
      lt.push_back(std::log(t));
      lq.push_back(std::log(qv));
    }
  }
  if (all_zero) throw Error(ErrorKind::OrderMismatch, "u(a + tX) / t^p vanishes on the grid");
  if (lt.size() < static_cast<std::size_t>(kFitPoints))
    throw Error(ErrorKind::OrderMismatch, "u(a + tX) / t^p changes sign or vanishes on the grid");
  if (std::abs(slope_fit(lt, lq, nullptr)) >= 0.5)
    throw Error(ErrorKind::OrderMismatch, "u(a + tX) / t^p diverges or decays; order differs from p");

  constexpr int kLevels = 16;
  std::vector<double> q;
  double t = 1e-2;
  for (int m = 0; m < kLevels; ++m, t *= 0.5) q.push_back(quotient(t));
  return aitken(q[kLevels - 3], q[kLevels - 2], q[kLevels - 1]);
}

}  // namespace invmetrics::numerics
