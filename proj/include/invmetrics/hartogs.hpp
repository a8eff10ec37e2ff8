#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "invmetrics/foundations.hpp"

namespace invmetrics::hartogs {

/// phi(xi, eta) = sum_k 2^-k log((|xi - a_k|^2 + |eta|) / k), where a_k runs
/// through the nonzero dyadic points of the unit disc, level by level
/// (a point first appearing on the 2^-m lattice gets an index >= m, hence
/// |a_k| >= 2^-k).
struct Exam1Series {
  /// Number of summed terms; 0 picks the smallest count certifying
  /// tail_tolerance at the query point.
  std::size_t truncation = 0;
  double tail_tolerance = 1e-8;
};

/// phi_k(lambda) = sum_{s=2}^k s^-2 log|lambda - 1/s| on |lambda| < 1/2, or
/// the full series phi when k is empty.
struct Exam3Series {
  std::optional<int> k;
  /// Direct-summation length for the full series; 0 selects 10000.
  std::size_t truncation = 0;
};

using PhiSeriesSpec = std::variant<Exam1Series, Exam3Series>;

struct PhiValue {
  double value;
  double certified_error;
};

/// Exam1: point = (xi, eta). Exam3: point = (lambda).
PhiValue phi_eval(const PhiSeriesSpec& spec, const ComplexVector& point);

/// The first `count` points of the dense sequence used by Exam1Series.
std::vector<Complex> dense_sequence(std::size_t count);

struct HartogsDomain {
  enum class Variant {
    /// { z in C^3 : |z_1| exp(phi(z_2, z_3)) < 1 }
    Exam1G,
    /// slice { (z_1, z_2) : (z_1, z_2, 0) in Exam1G }
    Exam1D,
    /// { |z_1| < 1/2, |z_2| exp(phi_k(z_1)) < 1 }
    Exam3Gk,
    /// { |z_1| < 1/2, |z_2| exp(phi(z_1)) < 1 }
    Exam3G,
  };
  Variant variant = Variant::Exam1G;
  int k = 2;
  Exam1Series exam1_series{};
  std::size_t exam3_truncation = 0;

  static HartogsDomain exam1() { return {Variant::Exam1G}; }
  static HartogsDomain exam1_slice() { return {Variant::Exam1D}; }
  static HartogsDomain exam3(std::optional<int> k = std::nullopt);

  std::size_t dim() const { return variant == Variant::Exam1G ? 3 : 2; }
};

enum class Membership { Inside, Outside, Indeterminate };

Membership membership(const HartogsDomain& domain, const ComplexVector& z);

/// The candidate functions the counterexamples are built from:
/// Exam1G at c = (0, 0, t), t != 0: (|z_1| e^{phi(z_2, z_3)})^{1 + eps/p};
/// Exam3Gk at the origin: (|z_2| e^{phi_k(z_1)})^{1 + eps/p}. Metric kinds use
/// eps = 0. eps = 0 for function kinds is the pointwise supremum over eps > 0.
CandidateFunction make_candidate(const HartogsDomain& domain, const ComplexVector& base,
                                 const MetricKind& kind, double eps);

/// Certified lower bound for the Sibony function s^(p) (function kinds) or the
/// Sibony pseudometric S^(2p) (metric kinds) coming from the candidate above.
double candidate_lower_bound(const HartogsDomain& domain, const ComplexVector& base,
                             const MetricKind& kind, const ComplexVector& target_or_dir,
                             double eps = 0.0);

/// Values established by proof for a closed list of (domain, kind, base,
/// target) tuples. Anything else throws NotProven.
MetricValue proven_value(const HartogsDomain& domain, const MetricKind& kind,
                         const ComplexVector& base, const ComplexVector& target_or_dir);

struct FamilyRow {
  int k;
  double phi_k0;
  double exp_phi_k0;
  double lower_bound;
  double limit_value;
  double proven_g_value;
};

/// Rows k = 2..k_max contrasting the candidate lower bounds on G_k with the
/// proven value 0 on the union G, at the point (0, z2).
std::vector<FamilyRow> increasing_family_table(int k_max, Complex z2, int p);

}  // namespace invmetrics::hartogs
