#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "invmetrics/foundations.hpp"

namespace invmetrics::balanced {

/// (sum_j (w_j |z_j|)^q)^(1/q); q = +infinity gives max_j w_j |z_j|.
struct WeightedNorm {
  std::vector<double> weights;
  double exponent = 2.0;
};

/// scale * prod_j |z_j|^theta_j with theta_j >= 0 and sum theta_j = 1.
struct Monomial {
  std::vector<double> theta;
  double scale = 1.0;
};

class MinkowskiSpec;

struct MaxOf {
  std::vector<MinkowskiSpec> terms;
};

/// Minkowski functional h of a balanced domain G = { h < 1 }. Every variant
/// depends only on |z_1|, ..., |z_n|, is nondecreasing in each of them, and
/// has log h plurisubharmonic, so the domain is pseudoconvex and complete
/// n-circled.
class MinkowskiSpec {
 public:
  using Variant = std::variant<WeightedNorm, Monomial, MaxOf>;

  MinkowskiSpec(WeightedNorm v);
  MinkowskiSpec(Monomial v);
  MinkowskiSpec(MaxOf v);

  static MinkowskiSpec weighted_norm(std::vector<double> weights, double exponent);
  static MinkowskiSpec monomial(std::vector<double> theta, double scale = 1.0);
  static MinkowskiSpec max_of(std::vector<MinkowskiSpec> terms);

  const Variant& variant() const { return *v_; }
  std::size_t dim() const;
  bool is_convex() const;

  /// h evaluated on the moduli |z_j|.
  double eval_abs(std::span<const double> x) const;

 private:
  std::shared_ptr<const Variant> v_;
};

double minkowski_eval(const MinkowskiSpec& spec, const ComplexVector& z);

struct EnvelopeOptions {
  /// Number of parts in the decomposition; 0 selects 2n + 1.
  int parts = 0;
  int restarts = 64;
  std::uint64_t seed = 0x5eed;
};

struct EnvelopeResult {
  double value = 0.0;
  std::vector<ComplexVector> decomposition;
  /// value minus the best lower bound produced by a seminorm q <= h.
  double certificate_gap = 0.0;
  double lower_bound = 0.0;
};

/// Infimal convolution inf { sum_i h(z_i) : sum_i z_i = z }, i.e. the Minkowski
/// functional of the convex envelope of G, by multi-start local minimization.
/// Throws ConvergenceFailure if no restart becomes stationary.
EnvelopeResult convex_envelope(const MinkowskiSpec& spec, const ComplexVector& z,
                               const EnvelopeOptions& options = {});

/// Best lower bound max_c <c,|z|> / h°(c) over seminorms of the form
/// w -> <c, |w|> / h°(c), with h°(c) = sup { <c,|w|> : h(w) <= 1 }.
double seminorm_lower_bound(const MinkowskiSpec& spec, const ComplexVector& z);

/// Invariants at the origin of a pseudoconvex balanced domain: Green and
/// Azukawa equal h, Caratheodory and Sibony equal the envelope.
MetricValue balanced_metrics_at_zero(const MinkowskiSpec& spec, bool pseudoconvex,
                                     const MetricKind& kind, const ComplexVector& z_or_x,
                                     const EnvelopeOptions& options = {});

/// max{ |z'| / eps, h_D(z'') / R, |z''| / k }, an upper bound for the Green
/// function at 0 of a product neighbourhood inside a complete n-circled domain.
double usc_product_bound(double eps, double R, double k, const MinkowskiSpec& h_d,
                         const ComplexVector& z_prime, const ComplexVector& z_second);

}  // namespace invmetrics::balanced
