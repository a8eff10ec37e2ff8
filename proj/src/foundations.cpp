#include "invmetrics/foundations.hpp"

#include <cmath>
#include <sstream>

namespace invmetrics {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::InvalidKind: return "InvalidKind";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::RegionViolation: return "RegionViolation";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::NotProven: return "NotProven";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::StepTooSmall: return "StepTooSmall";
    case ErrorKind::Undetermined: return "Undetermined";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::MapRangeViolation: return "MapRangeViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

// ---------------------------------------------------------------------------

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::DimensionMismatch, "vector of dimension 0");
  for (const auto& c : entries_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::InvalidValue, "non-finite vector entry");
  }
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::vector<Complex>(entries)) {}

ComplexVector ComplexVector::zeros(std::size_t n) {
  return ComplexVector(std::vector<Complex>(n, Complex(0.0, 0.0)));
}

ComplexVector ComplexVector::real(std::span<const double> values) {
  std::vector<Complex> e(values.begin(), values.end());
  return ComplexVector(std::move(e));
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const auto& c : entries_) s += std::norm(c);
  return std::sqrt(s);
}

namespace {
void require_same_dim(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}
}  // namespace

ComplexVector ComplexVector::operator+(const ComplexVector& other) const {
  require_same_dim(*this, other);
  std::vector<Complex> e(dim());
  for (std::size_t j = 0; j < dim(); ++j) e[j] = entries_[j] + other[j];
  return ComplexVector(std::move(e));
}

ComplexVector ComplexVector::operator-(const ComplexVector& other) const {
  require_same_dim(*this, other);
  std::vector<Complex> e(dim());
  for (std::size_t j = 0; j < dim(); ++j) e[j] = entries_[j] - other[j];
  return ComplexVector(std::move(e));
}

ComplexVector ComplexVector::operator*(Complex scalar) const {
  std::vector<Complex> e(dim());
  for (std::size_t j = 0; j < dim(); ++j) e[j] = entries_[j] * scalar;
  return ComplexVector(std::move(e));
}

ComplexVector ComplexVector::hadamard(const ComplexVector& other) const {
  require_same_dim(*this, other);
  std::vector<Complex> e(dim());
  for (std::size_t j = 0; j < dim(); ++j) e[j] = entries_[j] * other[j];
  return ComplexVector(std::move(e));
}

// ---------------------------------------------------------------------------

MetricKind MetricKind::sibony_function(int p) {
  if (p < 1) throw Error(ErrorKind::InvalidKind, "Sibony function order must be >= 1");
  return {Tag::SibonyFunction, p};
}

MetricKind MetricKind::sibony_metric(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidKind, "Sibony metric order must be >= 1");
  return {Tag::SibonyMetric, order};
}

bool MetricKind::is_function() const noexcept {
  return tag_ == Tag::Mobius || tag_ == Tag::Green || tag_ == Tag::SibonyFunction;
}

std::string MetricKind::name() const {
  switch (tag_) {
    case Tag::Mobius: return "mobius";
    case Tag::Caratheodory: return "caratheodory";
    case Tag::Green: return "green";
    case Tag::Azukawa: return "azukawa";
    case Tag::SibonyFunction:
      return order_ == 2 ? "sibony" : "sibony-function(" + std::to_string(order_) + ")";
    case Tag::SibonyMetric:
      return order_ == 2 ? "sibony-metric" : "sibony-metric(" + std::to_string(order_) + ")";
  }
  return "?";
}

const char* to_string(ValueStatus status) {
  switch (status) {
    case ValueStatus::Exact: return "Exact";
    case ValueStatus::ProvenExact: return "ProvenExact";
    case ValueStatus::Bounds: return "Bounds";
    case ValueStatus::Unknown: return "Unknown";
  }
  return "?";
}

MetricValue metric_value_exact(double v) {
  if (!std::isfinite(v) || v < 0.0)
    throw Error(ErrorKind::InvalidValue, "metric value must be finite and >= 0");
  return {v, v, ValueStatus::Exact, {}, 0.0};
}

MetricValue metric_value_proven(double v, std::string citation, double error) {
  if (!std::isfinite(v) || v < 0.0)
    throw Error(ErrorKind::InvalidValue, "metric value must be finite and >= 0");
  return {v, v, ValueStatus::ProvenExact, std::move(citation), error};
}

MetricValue metric_value_bounds(double lower, double upper, ValueStatus status) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower < 0.0 || upper < lower)
    throw Error(ErrorKind::InvalidValue, "bounds must satisfy 0 <= lower <= upper");
  return {lower, upper, status, {}, 0.0};
}

MetricValue intersect(const MetricValue& a, const MetricValue& b) {
  MetricValue r;
  r.lower = std::max(a.lower - a.error, b.lower - b.error);
  r.upper = std::min(a.upper + a.error, b.upper + b.error);
  if (a.is_exact()) {
    r.status = a.status;
    r.citation = a.citation;
  } else if (b.is_exact()) {
    r.status = b.status;
    r.citation = b.citation;
  } else {
    r.status = ValueStatus::Bounds;
  }
  return r;
}

bool is_consistent(const MetricValue& v, double tol) {
  if (!(v.lower >= 0.0) || !(v.upper >= 0.0)) return false;
  if (v.lower > v.upper + tol) return false;
  if (v.is_exact() && std::abs(v.upper - v.lower) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------

Complex ipow(Complex z, int k) {
  if (k == 0) return {1.0, 0.0};
  if (k < 0) {
    if (z == Complex(0.0, 0.0))
      throw Error(ErrorKind::DomainViolation, "negative power of zero");
    return Complex(1.0, 0.0) / ipow(z, -k);
  }
  Complex result(1.0, 0.0);
  Complex base = z;
  unsigned e = static_cast<unsigned>(k);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

namespace {

Complex monomial_row(const MonomialMap& f, std::size_t i, const ComplexVector& z) {
  Complex v = f.coeffs[i];
  for (std::size_t j = 0; j < z.dim(); ++j) {
    int b = f.exponents[i][j];
    if (b < 0 && z[j] == Complex(0.0, 0.0))
      throw Error(ErrorKind::DomainViolation,
                  "negative exponent meets zero coordinate " + std::to_string(j));
    v *= ipow(z[j], b);
  }
  return v;
}

void check_monomial_shape(const MonomialMap& f) {
  if (f.coeffs.size() != f.exponents.size() || f.coeffs.empty())
    throw Error(ErrorKind::DimensionMismatch, "monomial map coefficient/exponent rows differ");
  for (const auto& row : f.exponents)
    if (row.size() != f.exponents.front().size())
      throw Error(ErrorKind::DimensionMismatch, "ragged exponent matrix");
}

struct SourceDim {
  std::size_t operator()(const MonomialMap& f) const {
    check_monomial_shape(f);
    return f.exponents.front().size();
  }
  std::size_t operator()(const CoordinateEmbedding& f) const {
    return f.target_dim - f.fixed.size();
  }
  std::size_t operator()(const Projection& f) const {
    std::size_t m = 0;
    for (auto i : f.indices) m = std::max(m, i + 1);
    return m;
  }
  std::size_t operator()(const Curve&) const { return 1; }
};

struct TargetDim {
  std::size_t operator()(const MonomialMap& f) const { return f.coeffs.size(); }
  std::size_t operator()(const CoordinateEmbedding& f) const { return f.target_dim; }
  std::size_t operator()(const Projection& f) const { return f.indices.size(); }
  std::size_t operator()(const Curve& f) const {
    return f.shape == Curve::Shape::Affine ? f.point.dim() : f.coeffs.size();
  }
};

std::vector<bool> fixed_mask(const CoordinateEmbedding& f) {
  std::vector<bool> mask(f.target_dim, false);
  for (const auto& [idx, value] : f.fixed) {
    if (idx >= f.target_dim || mask[idx])
      throw Error(ErrorKind::InvalidInput, "bad fixed coordinate index");
    mask[idx] = true;
  }
  return mask;
}

}  // namespace

std::size_t source_dim(const HolomorphicMapSpec& f) { return std::visit(SourceDim{}, f); }
std::size_t target_dim(const HolomorphicMapSpec& f) { return std::visit(TargetDim{}, f); }

ComplexVector apply_map(const HolomorphicMapSpec& spec, const ComplexVector& z) {
  if (z.dim() != source_dim(spec) && !std::holds_alternative<Projection>(spec))
    throw Error(ErrorKind::DimensionMismatch, "map source dimension differs from point");
  return std::visit(
      [&](const auto& f) -> ComplexVector {
        using T = std::decay_t<decltype(f)>;
        std::vector<Complex> out;
        if constexpr (std::is_same_v<T, MonomialMap>) {
          for (std::size_t i = 0; i < f.coeffs.size(); ++i) out.push_back(monomial_row(f, i, z));
        } else if constexpr (std::is_same_v<T, CoordinateEmbedding>) {
          auto mask = fixed_mask(f);
          out.assign(f.target_dim, Complex(0.0, 0.0));
          for (const auto& [idx, value] : f.fixed) out[idx] = value;
          std::size_t k = 0;
          for (std::size_t i = 0; i < f.target_dim; ++i)
            if (!mask[i]) out[i] = z[k++];
        } else if constexpr (std::is_same_v<T, Projection>) {
          for (auto i : f.indices) {
            if (i >= z.dim()) throw Error(ErrorKind::DimensionMismatch, "projection index");
            out.push_back(z[i]);
          }
        } else {
          const Complex lambda = z[0];
          if (f.shape == Curve::Shape::Affine) {
            return f.point + f.direction * lambda;
          }
          if (f.coeffs.size() != f.powers.size())
            throw Error(ErrorKind::DimensionMismatch, "curve coefficients/powers differ");
          for (std::size_t j = 0; j < f.coeffs.size(); ++j)
            out.push_back(f.coeffs[j] * ipow(lambda, f.powers[j]));
        }
        return ComplexVector(std::move(out));
      },
      spec);
}

ComplexVector map_differential(const HolomorphicMapSpec& spec, const ComplexVector& a,
                               const ComplexVector& x) {
  if (a.dim() != x.dim()) throw Error(ErrorKind::DimensionMismatch, "base and direction");
  return std::visit(
      [&](const auto& f) -> ComplexVector {
        using T = std::decay_t<decltype(f)>;
        std::vector<Complex> out;
        if constexpr (std::is_same_v<T, MonomialMap>) {
          check_monomial_shape(f);
          if (a.dim() != f.exponents.front().size())
            throw Error(ErrorKind::DimensionMismatch, "map source dimension differs from point");
          for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            Complex d(0.0, 0.0);
            for (std::size_t j = 0; j < a.dim(); ++j) {
              int b = f.exponents[i][j];
              if (b == 0 || x[j] == Complex(0.0, 0.0)) continue;
              Complex term = f.coeffs[i] * static_cast<double>(b) * ipow(a[j], b - 1) * x[j];
              for (std::size_t k = 0; k < a.dim(); ++k)
                if (k != j) term *= ipow(a[k], f.exponents[i][k]);
              d += term;
            }
            out.push_back(d);
          }
        } else if constexpr (std::is_same_v<T, CoordinateEmbedding>) {
          auto mask = fixed_mask(f);
          out.assign(f.target_dim, Complex(0.0, 0.0));
          std::size_t k = 0;
          for (std::size_t i = 0; i < f.target_dim; ++i)
            if (!mask[i]) out[i] = x[k++];
        } else if constexpr (std::is_same_v<T, Projection>) {
          for (auto i : f.indices) out.push_back(x.entries()[i]);
        } else {
          const Complex lambda = a[0];
          if (f.shape == Curve::Shape::Affine) return f.direction * x[0];
          for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
            int k = f.powers[j];
            out.push_back(k == 0 ? Complex(0.0, 0.0)
                                 : f.coeffs[j] * static_cast<double>(k) * ipow(lambda, k - 1) * x[0]);
          }
        }
        return ComplexVector(std::move(out));
      },
      spec);
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  check_monomial_shape(outer);
  check_monomial_shape(inner);
  if (outer.exponents.front().size() != inner.coeffs.size())
    throw Error(ErrorKind::DimensionMismatch, "cannot compose: inner target != outer source");
  const std::size_t m = outer.coeffs.size();
  const std::size_t mid = inner.coeffs.size();
  const std::size_t n = inner.exponents.front().size();
  MonomialMap out;
  out.coeffs.resize(m);
  out.exponents.assign(m, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    Complex c = outer.coeffs[i];
    for (std::size_t j = 0; j < mid; ++j) {
      int b = outer.exponents[i][j];
      c *= ipow(inner.coeffs[j], b);
      for (std::size_t k = 0; k < n; ++k) out.exponents[i][k] += b * inner.exponents[j][k];
    }
    out.coeffs[i] = c;
  }
  return out;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
  abs_ += std::abs(x);
}

double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace invmetrics
