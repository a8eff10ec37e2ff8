#include "invmetrics/balanced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace invmetrics::balanced {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStationarityTol = 1e-9;

struct EvalAbs {
  std::span<const double> x;
  double operator()(const WeightedNorm& w) const {
    if (std::isinf(w.exponent)) {
      double m = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) m = std::max(m, w.weights[j] * x[j]);
      return m;
    }
    if (w.exponent == 2.0) {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) s += (w.weights[j] * x[j]) * (w.weights[j] * x[j]);
      return std::sqrt(s);
    }
    double m = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) m = std::max(m, w.weights[j] * x[j]);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += std::pow(w.weights[j] * x[j] / m, w.exponent);
    return m * std::pow(s, 1.0 / w.exponent);
  }
  double operator()(const Monomial& mono) const {
    double v = mono.scale;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double t = mono.theta[j];
      if (t == 0.0) continue;
      if (x[j] == 0.0) return 0.0;
      v *= t == 1.0 ? x[j] : (t == 0.5 ? std::sqrt(x[j]) : std::pow(x[j], t));
    }
    return v;
  }
  double operator()(const MaxOf& m) const {
    double v = 0.0;
    for (const auto& term : m.terms) v = std::max(v, term.eval_abs(x));
    return v;
  }
};

std::vector<double> moduli(const ComplexVector& z) {
  std::vector<double> x(z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) x[j] = std::abs(z[j]);
  return x;
}

// ---------------------------------------------------------------------------
// Envelope in absolute coordinates. The state holds `parts` nonnegative
// vectors whose coordinatewise sum is the moduli vector of the query point.

class AbsProblem {
 public:
  AbsProblem(const MinkowskiSpec& spec, std::vector<double> target, std::size_t parts)
      : spec_(spec), target_(std::move(target)), n_(target_.size()), parts_(parts) {}

  std::size_t n() const { return n_; }
  std::size_t parts() const { return parts_; }
  const std::vector<double>& target() const { return target_; }

  double h(const double* row) const { return spec_.eval_abs(std::span<const double>(row, n_)); }

  double total(const std::vector<double>& state) const {
    CompensatedSum s;
    for (std::size_t i = 0; i < parts_; ++i) s.add(h(&state[i * n_]));
    return s.value();
  }

 private:
  const MinkowskiSpec& spec_;
  std::vector<double> target_;
  std::size_t n_;
  std::size_t parts_;
};

// Minimizes f over [lo, hi] by sampling followed by golden-section refinement
// around the best sample. Returns (argmin, value). f(0) is the incumbent.
template <class F>
std::pair<double, double> line_min(F&& f, double lo, double hi, double f0) {
  constexpr int kSamples = 24;
  double best_t = 0.0;
  double best_f = f0;
  const double step = (hi - lo) / kSamples;
  int best_i = -1;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = i == kSamples ? hi : lo + i * step;
    const double v = f(t);
    if (v < best_f) {
      best_f = v;
      best_t = t;
      best_i = i;
    }
  }
  double a, b;
  if (best_i < 0) {
    a = std::max(lo, -step);
    b = std::min(hi, step);
  } else {
    a = std::max(lo, best_t - step);
    b = std::min(hi, best_t + step);
  }
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 64 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best_f) {
    best_f = fc;
    best_t = c;
  }
  if (fd < best_f) {
    best_f = fd;
    best_t = d;
  }
  return {best_t, best_f};
}

struct LocalResult {
  std::vector<double> state;
  double value;
  bool stationary;
};

LocalResult local_search(const AbsProblem& prob, std::vector<double> x, std::mt19937_64& rng) {
  const std::size_t n = prob.n();
  const std::size_t P = prob.parts();
  std::vector<double> hv(P);
  for (std::size_t i = 0; i < P; ++i) hv[i] = prob.h(&x[i * n]);
  auto current = [&] {
    CompensatedSum s;
    for (double v : hv) s.add(v);
    return s.value();
  };
  double scale = 1.0;
  for (double t : prob.target()) scale = std::max(scale, t);

  std::vector<double> ri(n), rj(n);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, P - 1);

  // Moves part i by +t*v and part j by -t*v for t in [lo, hi].
  auto pair_move = [&](std::size_t i, std::size_t j, const std::vector<double>& v) {
    double lo = -kInf, hi = kInf;
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] > 0) {
        lo = std::max(lo, -x[i * n + k] / v[k]);
        hi = std::min(hi, x[j * n + k] / v[k]);
      } else if (v[k] < 0) {
        lo = std::max(lo, x[j * n + k] / v[k]);
        hi = std::min(hi, -x[i * n + k] / v[k]);
      }
    }
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) return 0.0;
    const double base = hv[i] + hv[j];
    auto f = [&](double t) {
      for (std::size_t k = 0; k < n; ++k) {
        ri[k] = std::max(0.0, x[i * n + k] + t * v[k]);
        rj[k] = std::max(0.0, x[j * n + k] - t * v[k]);
      }
      return prob.h(ri.data()) + prob.h(rj.data());
    };
    auto [t, val] = line_min(f, lo, hi, base);
    if (val < base - 1e-16 * scale && t != 0.0) {
      for (std::size_t k = 0; k < n; ++k) {
        x[i * n + k] = std::max(0.0, x[i * n + k] + t * v[k]);
        x[j * n + k] = std::max(0.0, x[j * n + k] - t * v[k]);
      }
      // Restore the exact column sums by absorbing rounding into part j.
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t q = 0; q < P; ++q)
          if (q != j) s += x[q * n + k];
        x[j * n + k] = std::max(0.0, prob.target()[k] - s);
      }
      hv[i] = prob.h(&x[i * n]);
      hv[j] = prob.h(&x[j * n]);
      return base - (hv[i] + hv[j]);
    }
    return 0.0;
  };

  std::vector<double> dir(n);
  double value = current();
  bool stationary = false;
  for (int sweep = 0; sweep < 400; ++sweep) {
    const double before = value;
    for (std::size_t i = 0; i < P; ++i) {
      for (std::size_t j = 0; j < P; ++j) {
        if (i == j) continue;
        if (i < j) {
          for (std::size_t k = 0; k < n; ++k) {
            std::fill(dir.begin(), dir.end(), 0.0);
            dir[k] = 1.0;
            pair_move(i, j, dir);
          }
        }
        // Shift a fraction of part j along its own ray into part i.
        for (std::size_t k = 0; k < n; ++k) dir[k] = x[j * n + k];
        pair_move(i, j, dir);
      }
    }
    for (std::size_t r = 0; r < P * n; ++r) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k) dir[k] = unit(rng) * prob.target()[k];
      pair_move(i, j, dir);
    }
    value = current();
    const double gain = before - value;
    if (gain <= kStationarityTol * 1e-4 * scale) {
      stationary = gain <= kStationarityTol * scale;
      break;
    }
  }
  return {std::move(x), value, stationary};
}

std::vector<double> random_start(const std::vector<double>& target, std::size_t P,
                                 std::mt19937_64& rng, int style) {
  const std::size_t n = target.size();
  std::vector<double> x(P * n, 0.0);
  std::uniform_real_distribution<double> u(1e-12, 1.0);
  if (style == 0) {
    for (std::size_t k = 0; k < n; ++k) x[k] = target[k];
  } else if (style == 1) {
    for (std::size_t k = 0; k < n; ++k) x[(k % P) * n + k] = target[k];
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> w(P);
      double s = 0.0;
      for (auto& wi : w) {
        wi = -std::log(u(rng));
        if (style % 3 == 0) wi = wi * wi * wi;
        s += wi;
      }
      for (std::size_t i = 0; i < P; ++i) x[i * n + k] = target[k] * w[i] / s;
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Maximization over the standard simplex: grid plus pattern refinement.

std::size_t simplex_resolution(std::size_t n, std::size_t budget) {
  if (n == 1) return 1;
  std::size_t res = 1;
  for (;;) {
    // number of points with coordinates in {0, 1/res, ...} summing to 1
    double count = 1.0;
    for (std::size_t i = 1; i < n; ++i) count = count * static_cast<double>(res + 1 + i - 1) / i;
    if (count > static_cast<double>(budget)) return std::max<std::size_t>(1, res - 1);
    ++res;
    if (res > 100000) return res;
  }
}

template <class F>
void enumerate_simplex(std::size_t n, std::size_t res, F&& visit) {
  std::vector<std::size_t> counts(n, 0);
  std::vector<double> point(n);
  auto rec = [&](auto&& self, std::size_t j, std::size_t left) -> void {
    if (j + 1 == n) {
      counts[j] = left;
      for (std::size_t k = 0; k < n; ++k) point[k] = static_cast<double>(counts[k]) / res;
      visit(point);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[j] = c;
      self(self, j + 1, left - c);
    }
  };
  rec(rec, 0, res);
}

template <class F>
double maximize_on_simplex(std::size_t n, F&& f, std::size_t budget) {
  const std::size_t res = simplex_resolution(n, budget);
  struct Cand {
    double v;
    std::vector<double> p;
  };
  std::vector<Cand> best;
  constexpr std::size_t kKeep = 4;
  enumerate_simplex(n, res, [&](const std::vector<double>& p) {
    const double v = f(p);
    if (std::isinf(v) && v > 0) {
      best.insert(best.begin(), Cand{v, p});
      return;
    }
    if (best.size() < kKeep || v > best.back().v) {
      best.push_back({v, p});
      std::sort(best.begin(), best.end(), [](const Cand& a, const Cand& b) { return a.v > b.v; });
      if (best.size() > kKeep) best.pop_back();
    }
  });
  double overall = best.empty() ? -kInf : best.front().v;
  if (std::isinf(overall)) return overall;
  for (auto& c : best) {
    std::vector<double> p = c.p;
    double v = c.v;
    double step = 1.0 / static_cast<double>(res);
    std::vector<double> q(n);
    while (step > 1e-14) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const double s = std::min(step, p[j]);
          if (s <= 0) continue;
          q = p;
          q[i] += s;
          q[j] -= s;
          const double w = f(q);
          if (w > v) {
            v = w;
            p = q;
            improved = true;
            if (std::isinf(v)) return v;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    overall = std::max(overall, v);
  }
  return overall;
}

}  // namespace

// ---------------------------------------------------------------------------

MinkowskiSpec::MinkowskiSpec(WeightedNorm v) {
  if (v.weights.empty()) throw Error(ErrorKind::InvalidInput, "weighted norm needs weights");
  for (double w : v.weights)
    if (!(w >= 0) || !std::isfinite(w)) throw Error(ErrorKind::InvalidInput, "weights must be >= 0");
  if (std::none_of(v.weights.begin(), v.weights.end(), [](double w) { return w > 0; }))
    throw Error(ErrorKind::InvalidInput, "at least one weight must be > 0");
  if (!(v.exponent >= 1.0)) throw Error(ErrorKind::InvalidInput, "norm exponent must be >= 1");
  v_ = std::make_shared<const Variant>(std::move(v));
}

MinkowskiSpec::MinkowskiSpec(Monomial v) {
  if (v.theta.empty()) throw Error(ErrorKind::InvalidInput, "monomial needs exponents");
  double s = 0.0;
  for (double t : v.theta) {
    if (!(t >= 0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidInput, "theta_j must be >= 0");
    s += t;
  }
  if (std::abs(s - 1.0) > 1e-12) throw Error(ErrorKind::InvalidInput, "theta must sum to 1");
  if (!(v.scale > 0) || !std::isfinite(v.scale))
    throw Error(ErrorKind::InvalidInput, "monomial scale must be > 0");
  v_ = std::make_shared<const Variant>(std::move(v));
}

MinkowskiSpec::MinkowskiSpec(MaxOf v) {
  if (v.terms.empty()) throw Error(ErrorKind::InvalidInput, "max_of needs terms");
  for (const auto& t : v.terms)
    if (t.dim() != v.terms.front().dim())
      throw Error(ErrorKind::DimensionMismatch, "max_of terms differ in dimension");
  v_ = std::make_shared<const Variant>(std::move(v));
}

MinkowskiSpec MinkowskiSpec::weighted_norm(std::vector<double> weights, double exponent) {
  return MinkowskiSpec(WeightedNorm{std::move(weights), exponent});
}

MinkowskiSpec MinkowskiSpec::monomial(std::vector<double> theta, double scale) {
  return MinkowskiSpec(Monomial{std::move(theta), scale});
}

MinkowskiSpec MinkowskiSpec::max_of(std::vector<MinkowskiSpec> terms) {
  return MinkowskiSpec(MaxOf{std::move(terms)});
}

std::size_t MinkowskiSpec::dim() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, WeightedNorm>) return v.weights.size();
        else if constexpr (std::is_same_v<T, Monomial>) return v.theta.size();
        else return v.terms.front().dim();
      },
      *v_);
}

bool MinkowskiSpec::is_convex() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, WeightedNorm>) return true;
        else if constexpr (std::is_same_v<T, Monomial>) {
          return std::count_if(v.theta.begin(), v.theta.end(), [](double t) { return t > 0; }) <= 1;
        } else {
          return std::all_of(v.terms.begin(), v.terms.end(),
                             [](const MinkowskiSpec& s) { return s.is_convex(); });
        }
      },
      *v_);
}

double MinkowskiSpec::eval_abs(std::span<const double> x) const {
  return std::visit(EvalAbs{x}, *v_);
}

double minkowski_eval(const MinkowskiSpec& spec, const ComplexVector& z) {
  if (z.dim() != spec.dim())
    throw Error(ErrorKind::DimensionMismatch, "point dimension differs from Minkowski functional");
  const auto x = moduli(z);
  return spec.eval_abs(x);
}

double seminorm_lower_bound(const MinkowskiSpec& spec, const ComplexVector& z) {
  const std::size_t n = spec.dim();
  if (z.dim() != n) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  const auto x = moduli(z);
  if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) return 0.0;
  if (n == 1) return spec.eval_abs(x);
  const std::size_t inner_budget = n == 2 ? 2000 : 1500;
  const std::size_t outer_budget = n == 2 ? 200 : 300;

  // h°(c) = sup over the simplex of <c,d> / h(d).
  auto dual_gauge = [&](const std::vector<double>& c) {
    auto ratio = [&](const std::vector<double>& d) {
      double num = 0.0;
      for (std::size_t k = 0; k < n; ++k) num += c[k] * d[k];
      if (num <= 0.0) return 0.0;
      const double hd = spec.eval_abs(d);
      return hd > 0.0 ? num / hd : kInf;
    };
    return maximize_on_simplex(n, ratio, inner_budget);
  };
  auto psi = [&](const std::vector<double>& c) {
    double num = 0.0;
    for (std::size_t k = 0; k < n; ++k) num += c[k] * x[k];
    if (num <= 0.0) return 0.0;
    const double g = dual_gauge(c);
    return std::isinf(g) || g <= 0.0 ? 0.0 : num / g;
  };
  return std::max(0.0, maximize_on_simplex(n, psi, outer_budget));
}

EnvelopeResult convex_envelope(const MinkowskiSpec& spec, const ComplexVector& z,
                               const EnvelopeOptions& options) {
  const std::size_t n = spec.dim();
  if (z.dim() != n) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  const int parts = options.parts == 0 ? static_cast<int>(2 * n + 1) : options.parts;
  if (parts < 2) throw Error(ErrorKind::InvalidInput, "need at least 2 parts");
  if (options.restarts < 1) throw Error(ErrorKind::InvalidInput, "need at least one restart");

  const auto target = moduli(z);
  std::vector<Complex> phase(n);
  for (std::size_t k = 0; k < n; ++k)
    phase[k] = target[k] > 0 ? z[k] / target[k] : Complex(1.0, 0.0);

  EnvelopeResult result;
  const double h_z = spec.eval_abs(target);
  if (std::all_of(target.begin(), target.end(), [](double v) { return v == 0.0; }) || h_z == 0.0) {
    result.value = 0.0;
    result.decomposition.assign(static_cast<std::size_t>(parts), ComplexVector::zeros(n));
    result.decomposition.front() = z;
    return result;
  }

  result.lower_bound = spec.is_convex() ? h_z : seminorm_lower_bound(spec, z);

  // In moduli coordinates n + 1 parts already realise the envelope of a
  // homogeneous function; extra parts only enlarge the search space.
  const std::size_t P = std::min<std::size_t>(static_cast<std::size_t>(parts), n + 1);
  AbsProblem prob(spec, target, P);

  std::vector<double> best_state;
  double best = kInf;
  bool any_stationary = false;
  for (int r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1));
    auto start = random_start(target, P, rng, r);
    LocalResult lr = local_search(prob, std::move(start), rng);
    any_stationary = any_stationary || lr.stationary;
    if (lr.value < best) {
      best = lr.value;
      best_state = std::move(lr.state);
    }
    if (any_stationary && best - result.lower_bound <= 1e-13 * std::max(1.0, h_z)) break;
  }
  if (!any_stationary)
    throw Error(ErrorKind::ConvergenceFailure, "no restart reached the stationarity tolerance");

  result.value = prob.total(best_state);
  for (std::size_t i = 0; i < static_cast<std::size_t>(parts); ++i) {
    std::vector<Complex> e(n, Complex(0.0, 0.0));
    if (i < P)
      for (std::size_t k = 0; k < n; ++k) e[k] = best_state[i * n + k] * phase[k];
    result.decomposition.emplace_back(std::move(e));
  }
  result.certificate_gap = std::max(0.0, result.value - result.lower_bound);
  return result;
}

MetricValue balanced_metrics_at_zero(const MinkowskiSpec& spec, bool pseudoconvex,
                                     const MetricKind& kind, const ComplexVector& v,
                                     const EnvelopeOptions& options) {
  if (!pseudoconvex)
    throw Error(ErrorKind::Unsupported, "identities at 0 require a pseudoconvex balanced domain");
  const double h = minkowski_eval(spec, v);
  auto envelope_value = [&](ValueStatus weak) {
    const EnvelopeResult env = convex_envelope(spec, v, options);
    if (env.certificate_gap <= 1e-6) return metric_value_exact(env.value);
    return metric_value_bounds(env.lower_bound, std::max(env.lower_bound, h), weak);
  };
  switch (kind.tag()) {
    case MetricKind::Tag::Green:
      if (h >= 1.0) throw Error(ErrorKind::DomainViolation, "point outside the balanced domain");
      return metric_value_exact(h);
    case MetricKind::Tag::Azukawa: return metric_value_exact(h);
    case MetricKind::Tag::Caratheodory: return envelope_value(ValueStatus::Bounds);
    case MetricKind::Tag::SibonyMetric: {
      if (kind.order() % 2 == 1)
        return metric_value_proven(0.0, "odd-order Sibony pseudometrics vanish identically");
      if (kind.order() == 2) return envelope_value(ValueStatus::Bounds);
      const MetricValue gamma = envelope_value(ValueStatus::Bounds);
      if (gamma.lower >= h) return metric_value_exact(h);
      return metric_value_bounds(gamma.lower, h, ValueStatus::Unknown);
    }
    case MetricKind::Tag::SibonyFunction:
      if (h >= 1.0) throw Error(ErrorKind::DomainViolation, "point outside the balanced domain");
      return metric_value_bounds(0.0, h, ValueStatus::Unknown);
    case MetricKind::Tag::Mobius: break;
  }
  throw Error(ErrorKind::UnsupportedKind, kind.name() + " has no formula on balanced domains");
}

double usc_product_bound(double eps, double R, double k, const MinkowskiSpec& h_d,
                         const ComplexVector& z_prime, const ComplexVector& z_second) {
  if (!(eps > 0) || !(k > 0) || !(R > 0 && R < 1))
    throw Error(ErrorKind::InvalidInput, "need eps > 0, k > 0, 0 < R < 1");
  return std::max({z_prime.norm() / eps, minkowski_eval(h_d, z_second) / R, z_second.norm() / k});
}

}  // namespace invmetrics::balanced
