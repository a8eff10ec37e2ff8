#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invmetrics/foundations.hpp"

namespace invmetrics::reinhardt {

enum class ArithmeticClass {
  /// alpha_1, ..., alpha_n are relatively prime integers.
  RelPrimeIntegers,
  /// alpha is not a real multiple of an integer vector.
  NotInRZn,
};

/// Exponents of an elementary Reinhardt domain
///   D_alpha = { z : z_j != 0 where alpha_j < 0, |z_1|^alpha_1 ... |z_n|^alpha_n < 1 }.
/// The arithmetic class is declared by the caller. RelPrimeIntegers is checked
/// exactly; NotInRZn is checked by rational reconstruction of the ratios
/// alpha_j / alpha_1 with denominators up to 10^6.
class ExponentVector {
 public:
  ExponentVector(std::vector<double> alpha, ArithmeticClass cls);

  std::size_t dim() const noexcept { return alpha_.size(); }
  double operator[](std::size_t j) const { return alpha_[j]; }
  std::span<const double> values() const noexcept { return alpha_; }
  ArithmeticClass arithmetic_class() const noexcept { return class_; }
  bool is_integral() const noexcept { return class_ == ArithmeticClass::RelPrimeIntegers; }
  /// Integer exponents; only meaningful for the integer class.
  int int_at(std::size_t j) const { return int_alpha_.at(j); }

 private:
  std::vector<double> alpha_;
  std::vector<int> int_alpha_;
  ArithmeticClass class_;
};

/// Xi(a) = { j : alpha_j > 0, a_j = 0 }, sigma = #Xi, r = sum over Xi (1 if
/// Xi is empty), mu = min over Xi.
struct PointClass {
  std::vector<std::size_t> xi;
  std::size_t sigma = 0;
  double r = 1.0;
  std::optional<double> mu;
};

/// True iff a lies in C^n(alpha) and |a^alpha| < 1.
bool contains(const ExponentVector& alpha, const ComplexVector& a);

/// |z^alpha|; requires z in C^n(alpha).
double monomial_modulus(const ExponentVector& alpha, const ComplexVector& z);

/// z^alpha as a complex number for the integer class; the modulus |z^alpha|
/// (with zero imaginary part) for the generic class.
Complex monomial_power(const ExponentVector& alpha, const ComplexVector& z);

PointClass classify(const ExponentVector& alpha, const ComplexVector& a);

struct TaylorCoefficient {
  Complex coefficient;
  double order;
};

/// Leading Taylor coefficient of lambda -> (a + lambda X)^alpha at 0 (integer
/// class only). For sigma(a) >= 1 this is the product of a_j^alpha_j off Xi
/// and X_j^alpha_j on Xi, at order r(a); for sigma(a) = 0 it is the first
/// derivative a^alpha * sum_j alpha_j X_j / a_j at order 1.
TaylorCoefficient taylor_lowest_coefficient(const ExponentVector& alpha, const ComplexVector& a,
                                            const ComplexVector& x);

/// Function kinds: Mobius, Green, SibonyFunction(p).
MetricValue eval_function(const ExponentVector& alpha, const MetricKind& kind,
                          const ComplexVector& a, const ComplexVector& z);

/// Metric kinds: Caratheodory, Azukawa, SibonyMetric(2p).
MetricValue eval_metric(const ExponentVector& alpha, const MetricKind& kind,
                        const ComplexVector& a, const ComplexVector& x);

/// Exact rational q = num / den, den > 0, stored in lowest terms.
struct Rational {
  Rational(std::int64_t num, std::int64_t den);
  std::int64_t num;
  std::int64_t den;
};

/// True iff q = (2p - k) / k for some k in {1, ..., 2p - 1}. For alpha = (q, 1)
/// and a = 0 these are exactly the q for which the order-2p Sibony metric is
/// not forced to vanish.
bool in_exclusion_set(Rational q, int p);

/// Vector form: true iff 2 p alpha_j = k (alpha_{s+1} + ... + alpha_n) for some
/// k in {1, ..., 2p - 1} and some j > s (1-based s; s = n - sigma(a)).
bool in_exclusion_set(std::span<const double> alpha, std::size_t s, int p);

}  // namespace invmetrics::reinhardt
