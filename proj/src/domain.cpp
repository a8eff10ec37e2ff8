#include "invmetrics/domain.hpp"

#include <algorithm>

#include "invmetrics/disc.hpp"

namespace invmetrics {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dim(const ComplexVector& z, std::size_t n, const char* what) {
  if (z.dim() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must have dimension " + std::to_string(n));
}

}  // namespace

std::size_t domain_dim(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const DiscDomain&) -> std::size_t { return 1; },
                        [](const ReinhardtDomain& r) { return r.alpha.dim(); },
                        [](const BalancedDomain& b) { return b.h.dim(); },
                        [](const hartogs::HartogsDomain& h) { return h.dim(); },
                    },
                    d);
}

bool domain_contains(const DomainSpec& d, const ComplexVector& z) {
  require_dim(z, domain_dim(d), "point");
  return std::visit(
      overloaded{
          [&](const DiscDomain&) { return std::abs(z[0]) < 1.0; },
          [&](const ReinhardtDomain& r) { return reinhardt::contains(r.alpha, z); },
          [&](const BalancedDomain& b) { return balanced::minkowski_eval(b.h, z) < 1.0; },
          [&](const hartogs::HartogsDomain& h) {
            return hartogs::membership(h, z) == hartogs::Membership::Inside;
          },
      },
      d);
}

MetricValue evaluate(const DomainSpec& d, const MetricKind& kind, const ComplexVector& base,
                     const ComplexVector& v) {
  const std::size_t n = domain_dim(d);
  require_dim(base, n, "base point");
  require_dim(v, n, kind.is_function() ? "target point" : "direction");
  return std::visit(
      overloaded{
          [&](const DiscDomain&) {
            return kind.is_function() ? disc::eval_function(kind, base[0], v[0])
                                      : disc::eval_metric(kind, base[0], v[0]);
          },
          [&](const ReinhardtDomain& r) {
            return kind.is_function() ? reinhardt::eval_function(r.alpha, kind, base, v)
                                      : reinhardt::eval_metric(r.alpha, kind, base, v);
          },
          [&](const BalancedDomain& b) {
            const auto& e = base.entries();
            if (!std::all_of(e.begin(), e.end(), [](Complex c) { return c == Complex(0.0, 0.0); }))
              throw Error(ErrorKind::Unsupported, "balanced domains are evaluated at the origin only");
            return balanced::balanced_metrics_at_zero(b.h, b.pseudoconvex, kind, v);
          },
          [&](const hartogs::HartogsDomain& h) { return hartogs::proven_value(h, kind, base, v); },
      },
      d);
}

}  // namespace invmetrics
