#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace invmetrics {

using Complex = std::complex<double>;

enum class ErrorKind {
  DomainViolation,
  DimensionMismatch,
  InvalidValue,
  InvalidKind,
  UnsupportedKind,
  InvalidOrder,
  InvalidInput,
  ConvergenceFailure,
  Unsupported,
  RegionViolation,
  SingularPoint,
  InvalidBase,
  NotProven,
  NonFiniteSample,
  NoConvergence,
  StepTooSmall,
  Undetermined,
  OrderMismatch,
  MapRangeViolation,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A point (or direction) of C^n with finite entries. The dimension is fixed
/// at construction.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector zeros(std::size_t n);
  static ComplexVector real(std::span<const double> values);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  double norm() const;
  ComplexVector operator+(const ComplexVector& other) const;
  ComplexVector operator-(const ComplexVector& other) const;
  ComplexVector operator*(Complex scalar) const;
  /// Coordinatewise product.
  ComplexVector hadamard(const ComplexVector& other) const;

  bool operator==(const ComplexVector& other) const = default;

 private:
  std::vector<Complex> entries_;
};

/// The six invariant objects plus the higher order Sibony variants.
/// SibonyFunction carries the order p (p = 2 is the classical Sibony
/// function); SibonyMetric carries the differentiation order q (q = 2 is the
/// classical Sibony pseudometric, odd q is identically zero).
class MetricKind {
 public:
  enum class Tag { Mobius, Caratheodory, Green, Azukawa, SibonyFunction, SibonyMetric };

  static MetricKind mobius() { return {Tag::Mobius, 0}; }
  static MetricKind caratheodory() { return {Tag::Caratheodory, 0}; }
  static MetricKind green() { return {Tag::Green, 0}; }
  static MetricKind azukawa() { return {Tag::Azukawa, 0}; }
  static MetricKind sibony_function(int p = 2);
  static MetricKind sibony_metric(int order = 2);

  Tag tag() const noexcept { return tag_; }
  int order() const noexcept { return order_; }
  bool is_function() const noexcept;
  bool is_metric() const noexcept { return !is_function(); }
  std::string name() const;

  bool operator==(const MetricKind&) const = default;

 private:
  MetricKind(Tag tag, int order) : tag_(tag), order_(order) {}
  Tag tag_;
  int order_;
};

enum class ValueStatus { Exact, ProvenExact, Bounds, Unknown };

const char* to_string(ValueStatus status);

/// Result of an evaluation: an exact number, a value the literature proves,
/// or an enclosing interval.
struct MetricValue {
  double lower = 0.0;
  double upper = 0.0;
  ValueStatus status = ValueStatus::Exact;
  std::string citation;
  /// Certified numerical error attached to a ProvenExact value obtained from a
  /// truncated series; 0 for closed forms.
  double error = 0.0;

  bool is_exact() const noexcept {
    return status == ValueStatus::Exact || status == ValueStatus::ProvenExact;
  }
  double value() const noexcept { return 0.5 * (lower + upper); }
};

MetricValue metric_value_exact(double v);
MetricValue metric_value_proven(double v, std::string citation, double error = 0.0);
MetricValue metric_value_bounds(double lower, double upper,
                                ValueStatus status = ValueStatus::Bounds);
/// Interval intersection of two enclosures of the same quantity. The result
/// may be empty (lower > upper); callers check with is_consistent().
MetricValue intersect(const MetricValue& a, const MetricValue& b);
bool is_consistent(const MetricValue& v, double tol = 0.0);

struct CandidateFunction {
  enum class Family { MonomialHartogs, PowerOfGreen, Custom };

  Family family = Family::Custom;
  std::function<double(const ComplexVector&)> evaluator;
  ComplexVector base;
  int order = 1;
  double eps = 0.0;

  double operator()(const ComplexVector& z) const { return evaluator(z); }
};

// Structured holomorphic maps.

/// F_i(z) = c_i * prod_j z_j^{beta_ij}.
struct MonomialMap {
  std::vector<Complex> coeffs;
  std::vector<std::vector<int>> exponents;
};

/// Places the source coordinates into the free slots of C^m, in order; the
/// remaining slots hold fixed values. fixed is a list of (index, value).
struct CoordinateEmbedding {
  std::size_t target_dim = 0;
  std::vector<std::pair<std::size_t, Complex>> fixed;
};

/// Keeps the listed coordinates (0-based).
struct Projection {
  std::vector<std::size_t> indices;
};

/// One-variable map. Affine: lambda -> point + lambda*direction.
/// Monomial: lambda -> (c_j * lambda^{k_j})_j.
struct Curve {
  enum class Shape { Affine, Monomial };
  Shape shape = Shape::Affine;
  ComplexVector point;
  ComplexVector direction;
  std::vector<Complex> coeffs;
  std::vector<int> powers;
};

using HolomorphicMapSpec = std::variant<MonomialMap, CoordinateEmbedding, Projection, Curve>;

std::size_t source_dim(const HolomorphicMapSpec& f);
std::size_t target_dim(const HolomorphicMapSpec& f);
ComplexVector apply_map(const HolomorphicMapSpec& f, const ComplexVector& z);
/// Exact differential F'(a)(X).
ComplexVector map_differential(const HolomorphicMapSpec& f, const ComplexVector& a,
                               const ComplexVector& x);
/// outer o inner for monomial maps.
MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);

/// z^k for integer k (negative k requires z != 0).
Complex ipow(Complex z, int k);

/// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }
  double abs_total() const { return abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

}  // namespace invmetrics
