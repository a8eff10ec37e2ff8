#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "invmetrics/domain.hpp"

namespace invmetrics::spec {

using Json = nlohmann::ordered_json;

/// Validates and converts a domain spec document. Unknown fields, wrong types
/// and invalid parameters throw Error(ParseError).
DomainSpec parse_domain(const Json& doc);
Json domain_to_json(const DomainSpec& d);

/// Command-line point literal: comma-separated entries "re:im" or "re".
ComplexVector parse_point(std::string_view text);

/// [[re, im], ...]
Json point_to_json(const ComplexVector& z);
ComplexVector point_from_json(const Json& j);

/// Names: mobius, caratheodory, green, azukawa, sibony-function, sibony-metric;
/// "sibony" picks the function or the metric by `function_context`.
MetricKind parse_metric_kind(std::string_view name, std::optional<int> order, bool function_context);
Json kind_to_json(const MetricKind& kind);
MetricKind kind_from_json(const Json& j);

Json map_to_json(const HolomorphicMapSpec& f);
HolomorphicMapSpec map_from_json(const Json& j);

Json metric_value_to_json(const MetricValue& v);

}  // namespace invmetrics::spec
