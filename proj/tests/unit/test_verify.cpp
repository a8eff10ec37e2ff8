#include <gtest/gtest.h>

#include "invmetrics/verify.hpp"

using namespace invmetrics;
using namespace invmetrics::verify;

TEST(Verify, ChainSuitePasses) {
  SuiteConfig c;
  c.name = "chain";
  c.seed = 42;
  c.samples = 1000;
  const Verdict v = check_chain(c);
  EXPECT_TRUE(v.passed()) << v.max_violation;
  EXPECT_GE(v.samples_run, 1000u);
}

TEST(Verify, AllSuitesPass) {
  SuiteConfig c;
  c.seed = 7;
  c.samples = 120;
  for (const auto& v : run_suite(c)) {
    EXPECT_TRUE(v.passed()) << v.property << " " << v.max_violation;
    if (!v.failures.empty()) ADD_FAILURE() << v.failures.front().message;
  }
}

TEST(Verify, ContractibilityCatalogSize) {
  SuiteConfig c;
  c.samples = 100;
  const auto verdicts = check_contractibility_catalog(c);
  EXPECT_GE(verdicts.size(), 10u);
  for (const auto& v : verdicts) {
    EXPECT_TRUE(v.passed()) << v.property;
    EXPECT_GE(v.samples_run, 100u) << v.property;
  }
}

TEST(Verify, Deterministic) {
  SuiteConfig c;
  c.seed = 99;
  c.samples = 50;
  const auto a = report_json(c, run_suite(c));
  const auto b = report_json(c, run_suite(c));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Verify, MapLeavingTargetIsReported) {
  Curve c;
  c.shape = Curve::Shape::Affine;
  c.point = {0.0};
  c.direction = {4.0};
  SuiteConfig config;
  config.samples = 50;
  const DomainSpec target = DiscDomain{};
  try {
    check_contractibility("blown-up curve", c, DiscDomain{}, target, config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MapRangeViolation);
  }
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(is_suite("nosuch"));
  SuiteConfig c;
  c.name = "nosuch";
  EXPECT_THROW(run_suite(c), Error);
}

TEST(Verify, ReportText) {
  SuiteConfig c;
  c.name = "normalization";
  const auto text = report_text(c, run_suite(c));
  EXPECT_NE(text.find("PASS normalization"), std::string::npos);
}
