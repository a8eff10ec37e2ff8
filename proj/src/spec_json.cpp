#include "invmetrics/spec_json.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>

namespace invmetrics::spec {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

void allow_only(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) fail(where + " must be a JSON object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : j.items())
    if (!allowed.count(k)) fail("unknown field '" + k + "' in " + where);
}

const Json& required(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) fail("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(what + " must be finite");
  return v;
}

std::vector<double> numbers(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) fail(what + " must be a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(number(e, what + " entry"));
  return out;
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  return j.get<int>();
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "complex entry"), 0.0};
  if (!j.is_array() || j.size() != 2) fail("complex numbers are [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

balanced::MinkowskiSpec parse_h(const Json& j) {
  const std::string where = "balanced h";
  if (!j.is_object()) fail(where + " must be an object");
  const Json& kind = required(j, "kind", where);
  if (!kind.is_string()) fail("h.kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "weighted_norm") {
    allow_only(j, {"kind", "weights", "exponent"}, where);
    const auto w = numbers(required(j, "weights", where), "weights");
    const Json& e = required(j, "exponent", where);
    double q;
    if (e.is_string()) {
      if (e.get<std::string>() != "inf") fail("exponent must be a number >= 1 or \"inf\"");
      q = std::numeric_limits<double>::infinity();
    } else {
      q = number(e, "exponent");
    }
    return wrap([&] { return balanced::MinkowskiSpec::weighted_norm(w, q); });
  }
  if (k == "monomial") {
    allow_only(j, {"kind", "theta", "scale"}, where);
    const auto theta = numbers(required(j, "theta", where), "theta");
    const double scale = j.contains("scale") ? number(j["scale"], "scale") : 1.0;
    return wrap([&] { return balanced::MinkowskiSpec::monomial(theta, scale); });
  }
  if (k == "max_of") {
    allow_only(j, {"kind", "terms"}, where);
    const Json& terms = required(j, "terms", where);
    if (!terms.is_array() || terms.empty()) fail("terms must be a non-empty array");
    std::vector<balanced::MinkowskiSpec> parts;
    for (const auto& t : terms) parts.push_back(parse_h(t));
    return wrap([&] { return balanced::MinkowskiSpec::max_of(parts); });
  }
  fail("unknown h.kind '" + k + "'");
}

Json h_to_json(const balanced::MinkowskiSpec& h) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        Json j;
        if constexpr (std::is_same_v<T, balanced::WeightedNorm>) {
          j["kind"] = "weighted_norm";
          j["weights"] = v.weights;
          if (std::isinf(v.exponent))
            j["exponent"] = "inf";
          else
            j["exponent"] = v.exponent;
        } else if constexpr (std::is_same_v<T, balanced::Monomial>) {
          j["kind"] = "monomial";
          j["theta"] = v.theta;
          j["scale"] = v.scale;
        } else {
          j["kind"] = "max_of";
          j["terms"] = Json::array();
          for (const auto& t : v.terms) j["terms"].push_back(h_to_json(t));
        }
        return j;
      },
      h.variant());
}

}  // namespace

DomainSpec parse_domain(const Json& doc) {
  if (!doc.is_object()) fail("domain spec must be a JSON object");
  const Json& type = required(doc, "type", "domain spec");
  if (!type.is_string()) fail("type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "disc") {
    allow_only(doc, {"type"}, "disc spec");
    return DiscDomain{};
  }
  if (t == "reinhardt") {
    allow_only(doc, {"type", "alpha", "class"}, "reinhardt spec");
    const auto alpha = numbers(required(doc, "alpha", "reinhardt spec"), "alpha");
    reinhardt::ArithmeticClass cls;
    if (doc.contains("class")) {
      const Json& c = doc["class"];
      if (!c.is_string()) fail("class must be a string");
      const std::string s = c.get<std::string>();
      if (s == "integers")
        cls = reinhardt::ArithmeticClass::RelPrimeIntegers;
      else if (s == "generic")
        cls = reinhardt::ArithmeticClass::NotInRZn;
      else
        fail("class must be \"integers\" or \"generic\"");
    } else {
      const bool ints = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a == std::round(a); });
      cls = ints ? reinhardt::ArithmeticClass::RelPrimeIntegers : reinhardt::ArithmeticClass::NotInRZn;
    }
    return wrap([&] { return DomainSpec{ReinhardtDomain{reinhardt::ExponentVector(alpha, cls)}}; });
  }
  if (t == "balanced") {
    allow_only(doc, {"type", "h", "pseudoconvex"}, "balanced spec");
    BalancedDomain b{parse_h(required(doc, "h", "balanced spec")), true};
    if (doc.contains("pseudoconvex")) {
      if (!doc["pseudoconvex"].is_boolean()) fail("pseudoconvex must be a boolean");
      b.pseudoconvex = doc["pseudoconvex"].get<bool>();
    }
    return b;
  }
  if (t == "hartogs") {
    allow_only(doc, {"type", "variant", "k", "truncation", "tail_tolerance"}, "hartogs spec");
    const Json& v = required(doc, "variant", "hartogs spec");
    if (!v.is_string()) fail("variant must be a string");
    const std::string variant = v.get<std::string>();
    std::size_t truncation = 0;
    if (doc.contains("truncation")) {
      const int K = integer(doc["truncation"], "truncation");
      if (K < 1) fail("truncation must be >= 1");
      truncation = static_cast<std::size_t>(K);
    }
    if (variant == "exam1" || variant == "exam1-slice") {
      if (doc.contains("k")) fail("k applies to the exam3 variant only");
      hartogs::HartogsDomain d =
          variant == "exam1" ? hartogs::HartogsDomain::exam1() : hartogs::HartogsDomain::exam1_slice();
      d.exam1_series.truncation = truncation;
      if (doc.contains("tail_tolerance")) {
        const double tol = number(doc["tail_tolerance"], "tail_tolerance");
        if (!(tol > 0)) fail("tail_tolerance must be > 0");
        d.exam1_series.tail_tolerance = tol;
      }
      return d;
    }
    if (variant == "exam3") {
      if (doc.contains("tail_tolerance")) fail("tail_tolerance applies to the exam1 variants only");
      std::optional<int> k;
      if (doc.contains("k")) k = integer(doc["k"], "k");
      hartogs::HartogsDomain d = wrap([&] { return hartogs::HartogsDomain::exam3(k); });
      d.exam3_truncation = truncation;
      return d;
    }
    fail("unknown hartogs variant '" + variant + "'");
  }
  fail("unknown domain type '" + t + "'");
}

Json domain_to_json(const DomainSpec& d) {
  Json j;
  if (std::holds_alternative<DiscDomain>(d)) {
    j["type"] = "disc";
  } else if (const auto* r = std::get_if<ReinhardtDomain>(&d)) {
    j["type"] = "reinhardt";
    j["alpha"] = std::vector<double>(r->alpha.values().begin(), r->alpha.values().end());
    j["class"] = r->alpha.is_integral() ? "integers" : "generic";
  } else if (const auto* b = std::get_if<BalancedDomain>(&d)) {
    j["type"] = "balanced";
    j["h"] = h_to_json(b->h);
    j["pseudoconvex"] = b->pseudoconvex;
  } else {
    const auto& h = std::get<hartogs::HartogsDomain>(d);
    j["type"] = "hartogs";
    switch (h.variant) {
      case hartogs::HartogsDomain::Variant::Exam1G:
      case hartogs::HartogsDomain::Variant::Exam1D:
        j["variant"] = h.variant == hartogs::HartogsDomain::Variant::Exam1G ? "exam1" : "exam1-slice";
        if (h.exam1_series.truncation) j["truncation"] = h.exam1_series.truncation;
        j["tail_tolerance"] = h.exam1_series.tail_tolerance;
        break;
      case hartogs::HartogsDomain::Variant::Exam3Gk:
      case hartogs::HartogsDomain::Variant::Exam3G:
        j["variant"] = "exam3";
        if (h.variant == hartogs::HartogsDomain::Variant::Exam3Gk) j["k"] = h.k;
        if (h.exam3_truncation) j["truncation"] = h.exam3_truncation;
        break;
    }
  }
  return j;
}

ComplexVector parse_point(std::string_view text) {
  std::vector<Complex> out;
  auto parse_real = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      fail("cannot parse number '" + std::string(s) + "'");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      out.emplace_back(parse_real(item), 0.0);
    else
      out.emplace_back(parse_real(item.substr(0, colon)), parse_real(item.substr(colon + 1)));
    start = comma + 1;
  }
  return ComplexVector(std::move(out));
}

Json point_to_json(const ComplexVector& z) {
  Json j = Json::array();
  for (const Complex& c : z.entries()) j.push_back(complex_to_json(c));
  return j;
}

ComplexVector point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("points are non-empty arrays of [re, im] pairs");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return ComplexVector(std::move(out));
}

MetricKind parse_metric_kind(std::string_view name, std::optional<int> order, bool function_context) {
  auto no_order = [&] {
    if (order) fail("--order applies to the Sibony kinds only");
  };
  if (name == "mobius") return no_order(), MetricKind::mobius();
  if (name == "caratheodory") return no_order(), MetricKind::caratheodory();
  if (name == "green") return no_order(), MetricKind::green();
  if (name == "azukawa") return no_order(), MetricKind::azukawa();
  const int p = order.value_or(2);
  if (p < 1) fail("order must be >= 1");
  if (name == "sibony-function") return MetricKind::sibony_function(p);
  if (name == "sibony-metric") return MetricKind::sibony_metric(p);
  if (name == "sibony")
    return function_context ? MetricKind::sibony_function(p) : MetricKind::sibony_metric(p);
  fail("unknown metric kind '" + std::string(name) + "'");
}

Json kind_to_json(const MetricKind& kind) {
  Json j;
  switch (kind.tag()) {
    case MetricKind::Tag::Mobius: j["kind"] = "mobius"; break;
    case MetricKind::Tag::Caratheodory: j["kind"] = "caratheodory"; break;
    case MetricKind::Tag::Green: j["kind"] = "green"; break;
    case MetricKind::Tag::Azukawa: j["kind"] = "azukawa"; break;
    case MetricKind::Tag::SibonyFunction:
      j["kind"] = "sibony-function";
      j["order"] = kind.order();
      break;
    case MetricKind::Tag::SibonyMetric:
      j["kind"] = "sibony-metric";
      j["order"] = kind.order();
      break;
  }
  return j;
}

MetricKind kind_from_json(const Json& j) {
  allow_only(j, {"kind", "order"}, "metric kind");
  const Json& k = required(j, "kind", "metric kind");
  if (!k.is_string()) fail("metric kind must be a string");
  std::optional<int> order;
  if (j.contains("order")) order = integer(j["order"], "order");
  return parse_metric_kind(k.get<std::string>(), order, true);
}

Json map_to_json(const HolomorphicMapSpec& f) {
  Json j;
  if (const auto* m = std::get_if<MonomialMap>(&f)) {
    j["kind"] = "monomial";
    j["coeffs"] = Json::array();
    for (const Complex& c : m->coeffs) j["coeffs"].push_back(complex_to_json(c));
    j["exponents"] = m->exponents;
  } else if (const auto* e = std::get_if<CoordinateEmbedding>(&f)) {
    j["kind"] = "embedding";
    j["target_dim"] = e->target_dim;
    j["fixed"] = Json::array();
    for (const auto& [idx, val] : e->fixed) j["fixed"].push_back(Json::array({idx, complex_to_json(val)}));
  } else if (const auto* p = std::get_if<Projection>(&f)) {
    j["kind"] = "projection";
    j["indices"] = p->indices;
  } else {
    const auto& c = std::get<Curve>(f);
    j["kind"] = "curve";
    if (c.shape == Curve::Shape::Affine) {
      j["shape"] = "affine";
      j["point"] = point_to_json(c.point);
      j["direction"] = point_to_json(c.direction);
    } else {
      j["shape"] = "monomial";
      j["coeffs"] = Json::array();
      for (const Complex& v : c.coeffs) j["coeffs"].push_back(complex_to_json(v));
      j["powers"] = c.powers;
    }
  }
  return j;
}

HolomorphicMapSpec map_from_json(const Json& j) {
  if (!j.is_object()) fail("map must be an object");
  const Json& kind = required(j, "kind", "map");
  if (!kind.is_string()) fail("map kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "monomial") {
    allow_only(j, {"kind", "coeffs", "exponents"}, "monomial map");
    MonomialMap m;
    for (const auto& c : required(j, "coeffs", "monomial map")) m.coeffs.push_back(complex_from_json(c));
    for (const auto& row : required(j, "exponents", "monomial map")) {
      std::vector<int> r;
      for (const auto& e : row) r.push_back(integer(e, "exponent"));
      m.exponents.push_back(std::move(r));
    }
    return m;
  }
  if (k == "embedding") {
    allow_only(j, {"kind", "target_dim", "fixed"}, "embedding");
    CoordinateEmbedding e;
    e.target_dim = static_cast<std::size_t>(integer(required(j, "target_dim", "embedding"), "target_dim"));
    for (const auto& f : required(j, "fixed", "embedding")) {
      if (!f.is_array() || f.size() != 2) fail("fixed entries are [index, [re, im]]");
      e.fixed.emplace_back(static_cast<std::size_t>(integer(f[0], "index")), complex_from_json(f[1]));
    }
    return e;
  }
  if (k == "projection") {
    allow_only(j, {"kind", "indices"}, "projection");
    Projection p;
    for (const auto& i : required(j, "indices", "projection"))
      p.indices.push_back(static_cast<std::size_t>(integer(i, "index")));
    return p;
  }
  if (k == "curve") {
    allow_only(j, {"kind", "shape", "point", "direction", "coeffs", "powers"}, "curve");
    Curve c;
    const Json& shape = required(j, "shape", "curve");
    if (shape == "affine") {
      c.shape = Curve::Shape::Affine;
      c.point = point_from_json(required(j, "point", "curve"));
      c.direction = point_from_json(required(j, "direction", "curve"));
    } else if (shape == "monomial") {
      c.shape = Curve::Shape::Monomial;
      for (const auto& v : required(j, "coeffs", "curve")) c.coeffs.push_back(complex_from_json(v));
      for (const auto& p : required(j, "powers", "curve")) c.powers.push_back(integer(p, "power"));
    } else {
      fail("curve shape must be \"affine\" or \"monomial\"");
    }
    return c;
  }
  fail("unknown map kind '" + k + "'");
}

Json metric_value_to_json(const MetricValue& v) {
  Json j;
  j["lower"] = v.lower;
  j["upper"] = v.upper;
  j["status"] = to_string(v.status);
  if (!v.citation.empty()) j["citation"] = v.citation;
  if (v.error != 0.0) j["certified_error"] = v.error;
  return j;
}

}  // namespace invmetrics::spec
