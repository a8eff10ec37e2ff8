#pragma once

#include <variant>

#include "invmetrics/balanced.hpp"
#include "invmetrics/foundations.hpp"
#include "invmetrics/hartogs.hpp"
#include "invmetrics/reinhardt.hpp"

namespace invmetrics {

struct DiscDomain {};

struct ReinhardtDomain {
  reinhardt::ExponentVector alpha;
};

struct BalancedDomain {
  balanced::MinkowskiSpec h;
  bool pseudoconvex = true;
};

using DomainSpec = std::variant<DiscDomain, ReinhardtDomain, BalancedDomain, hartogs::HartogsDomain>;

std::size_t domain_dim(const DomainSpec& d);

/// Membership; Hartogs points within the certified error of the boundary
/// count as outside.
bool domain_contains(const DomainSpec& d, const ComplexVector& z);

/// Dispatches to the family evaluator. `v` is the target point for function
/// kinds and the direction for metric kinds. Balanced domains are evaluated at
/// base 0 only; Hartogs domains answer proven values only.
MetricValue evaluate(const DomainSpec& d, const MetricKind& kind, const ComplexVector& base,
                     const ComplexVector& v);

}  // namespace invmetrics
