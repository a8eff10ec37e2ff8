#include <gtest/gtest.h>

#include "invmetrics/spec_json.hpp"

using namespace invmetrics;
using spec::Json;

namespace {

ErrorKind parse_error_kind(const char* text) {
  try {
    spec::parse_domain(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidValue;
}

}  // namespace

TEST(SpecJson, ParsesEachDomainType) {
  EXPECT_TRUE(std::holds_alternative<DiscDomain>(spec::parse_domain(Json::parse(R"({"type":"disc"})"))));
  const auto r = spec::parse_domain(Json::parse(R"({"type":"reinhardt","alpha":[1,2,2]})"));
  ASSERT_TRUE(std::holds_alternative<ReinhardtDomain>(r));
  EXPECT_TRUE(std::get<ReinhardtDomain>(r).alpha.is_integral());
  const auto g = spec::parse_domain(Json::parse(R"({"type":"reinhardt","alpha":[1.4142135623730951,1]})"));
  EXPECT_FALSE(std::get<ReinhardtDomain>(g).alpha.is_integral());
  const auto b = spec::parse_domain(Json::parse(
      R"({"type":"balanced","h":{"kind":"max_of","terms":[{"kind":"weighted_norm","weights":[1,0],"exponent":"inf"},{"kind":"monomial","theta":[0.5,0.5],"scale":2}]}})"));
  EXPECT_EQ(domain_dim(b), 2u);
  const auto h = spec::parse_domain(Json::parse(R"({"type":"hartogs","variant":"exam3","k":5})"));
  EXPECT_EQ(std::get<hartogs::HartogsDomain>(h).variant, hartogs::HartogsDomain::Variant::Exam3Gk);
}

TEST(SpecJson, RejectsBadDocuments) {
  EXPECT_EQ(parse_error_kind(R"({"type":"disc","extra":1})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"type":"annulus"})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"alpha":[1,1]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"type":"reinhardt","alpha":[2,4]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"type":"reinhardt","alpha":[1,2],"class":"generic"})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"type":"hartogs","variant":"exam1","k":3})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"([1,2])"), ErrorKind::ParseError);
}

TEST(SpecJson, DomainRoundTrip) {
  const char* docs[] = {
      R"({"type":"disc"})",
      R"({"type":"reinhardt","alpha":[1.0,2.0,2.0],"class":"integers"})",
      R"({"type":"hartogs","variant":"exam1","truncation":40})",
  };
  for (const char* d : docs) {
    const Json once = spec::domain_to_json(spec::parse_domain(Json::parse(d)));
    EXPECT_EQ(spec::domain_to_json(spec::parse_domain(once)), once);
  }
}

TEST(SpecJson, Points) {
  const ComplexVector z = spec::parse_point("0.5:-0.25,1,0:2");
  EXPECT_EQ(z, ComplexVector({Complex(0.5, -0.25), 1.0, Complex(0, 2)}));
  EXPECT_EQ(spec::point_from_json(spec::point_to_json(z)), z);
  EXPECT_THROW(spec::parse_point("0.5:x"), Error);
  EXPECT_THROW(spec::parse_point(""), Error);
  EXPECT_THROW(spec::parse_point("1,,2"), Error);
}

TEST(SpecJson, MetricKinds) {
  EXPECT_EQ(spec::parse_metric_kind("sibony", std::nullopt, true), MetricKind::sibony_function(2));
  EXPECT_EQ(spec::parse_metric_kind("sibony", 6, false), MetricKind::sibony_metric(6));
  EXPECT_EQ(spec::parse_metric_kind("green", std::nullopt, true), MetricKind::green());
  EXPECT_THROW(spec::parse_metric_kind("green", 3, true), Error);
  EXPECT_THROW(spec::parse_metric_kind("kobayashi", std::nullopt, true), Error);
  for (const auto& k : {MetricKind::mobius(), MetricKind::sibony_function(3), MetricKind::sibony_metric(4)})
    EXPECT_EQ(spec::kind_from_json(spec::kind_to_json(k)), k);
}

TEST(SpecJson, MapRoundTrip) {
  const HolomorphicMapSpec maps[] = {
      MonomialMap{{Complex(1, 1)}, {{1, 2}}},
      CoordinateEmbedding{3, {{2, Complex(0.1, 0)}}},
      Projection{{0, 2}},
  };
  for (const auto& f : maps) {
    const Json j = spec::map_to_json(f);
    EXPECT_EQ(spec::map_to_json(spec::map_from_json(j)), j);
  }
}

TEST(SpecJson, MetricValueJson) {
  const Json j = spec::metric_value_to_json(metric_value_exact(0.5));
  EXPECT_EQ(j.dump(), R"({"lower":0.5,"upper":0.5,"status":"Exact"})");
  const Json p = spec::metric_value_to_json(metric_value_proven(0.0, "why"));
  EXPECT_EQ(p["citation"], "why");
}
