#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invmetrics/cli.hpp"

using invmetrics::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "invmetrics");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("invmetrics_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(CliEval, ReinhardtGreen) {
  const auto spec = temp_file("r122.json", R"({"type":"reinhardt","alpha":[1,2,2]})");
  const auto r = cli({"eval", spec, "--metric", "green", "--base", "0,0,0", "--target", "0.5,0.5,0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["lower"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["upper"].get<double>(), 0.5);
  EXPECT_EQ(j["status"], "Exact");
}

TEST(CliEval, HartogsCaratheodoryProven) {
  const auto spec = temp_file("exam1.json", R"({"type":"hartogs","variant":"exam1"})");
  const auto r = cli({"eval", spec, "--metric", "caratheodory", "--base", "0,0,0", "--dir", "1,0,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "ProvenExact");
  EXPECT_EQ(j["upper"].get<double>(), 0.0);
  EXPECT_TRUE(j.contains("citation"));
}

TEST(CliEval, ClassificationGapNeedsAllowBounds) {
  const auto spec = temp_file("r11.json", R"({"type":"reinhardt","alpha":[1,1]})");
  const std::vector<std::string> base = {"eval", spec, "--metric", "sibony-metric", "--order", "6",
                                         "--base", "0,0", "--dir", "1,1"};
  EXPECT_EQ(cli(base).code, 3);
  auto allowed = base;
  allowed.push_back("--allow-bounds");
  EXPECT_EQ(cli(allowed).code, 0);
}

TEST(CliEval, CsvFormat) {
  const auto spec = temp_file("disc.json", R"({"type":"disc"})");
  const auto r = cli({"eval", spec, "--metric", "mobius", "--base", "0", "--target", "0.7", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lower,upper,status,citation\n0.69999999999999996,0.69999999999999996,Exact,\n");
}

TEST(CliEval, ErrorCodes) {
  const auto disc = temp_file("disc2.json", R"({"type":"disc"})");
  EXPECT_EQ(cli({"eval", disc, "--metric", "green", "--base", "0", "--target", "1.5"}).code, 4);
  EXPECT_EQ(cli({"eval", disc, "--metric", "green", "--base", "0", "--target", "abc"}).code, 2);
  EXPECT_EQ(cli({"eval", disc, "--metric", "nosuch", "--base", "0", "--target", "0.1"}).code, 2);
  EXPECT_EQ(cli({"eval", disc, "--metric", "green", "--base", "0", "--dir", "0.1"}).code, 2);
  const auto bad = temp_file("bad.json", R"({"type":"disc","extra":true})");
  EXPECT_EQ(cli({"eval", bad, "--metric", "green", "--base", "0", "--target", "0.1"}).code, 2);
  const auto broken = temp_file("broken.json", "{");
  EXPECT_EQ(cli({"eval", broken, "--metric", "green", "--base", "0", "--target", "0.1"}).code, 2);
  EXPECT_EQ(cli({"eval", "/nonexistent.json", "--metric", "green", "--base", "0", "--target", "0.1"}).code, 2);
  const auto e3 = temp_file("exam3.json", R"({"type":"hartogs","variant":"exam3"})");
  EXPECT_EQ(cli({"eval", e3, "--metric", "green", "--base", "0,0", "--target", "0.05:0.01,0.1"}).code, 2);
}

TEST(CliDemo, WritesCsvAndExitCodes) {
  const auto path = (std::filesystem::temp_directory_path() / "invmetrics_increasing.csv").string();
  const auto r = cli({"demo", "increasing", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "z2,k,phi_k_0,exp_phi_k_0,lower_bound,limit_value,proven_G_value");
  EXPECT_EQ(cli({"demo", "nosuch"}).code, 2);
}

TEST(CliVerify, ChainSeed42) {
  const auto r1 = (std::filesystem::temp_directory_path() / "invmetrics_r1.json").string();
  const auto r2 = (std::filesystem::temp_directory_path() / "invmetrics_r2.json").string();
  EXPECT_EQ(cli({"verify", "--suite", "chain", "--seed", "42", "--samples", "1000", "--report", r1}).code, 0);
  EXPECT_EQ(cli({"verify", "--suite", "chain", "--seed", "42", "--samples", "1000", "--report", r2}).code, 0);
  std::ifstream a(r1), b(r2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  const auto j = nlohmann::json::parse(sa.str());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(cli({"verify", "--suite", "nosuch"}).code, 2);
}

TEST(CliVerify, SeedFromEnvironment) {
  setenv("INVMETRICS_SEED", "5", 1);
  const auto a = cli({"verify", "--suite", "oracle", "--samples", "10"});
  const auto b = cli({"verify", "--suite", "oracle", "--samples", "10", "--seed", "5"});
  unsetenv("INVMETRICS_SEED");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed 5"), std::string::npos);
}

TEST(CliUsage, MissingSubcommand) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Schema, ShippedAndParsable) {
  std::ifstream in(std::string(INVMETRICS_SCHEMA_DIR) + "/domain.schema.json");
  ASSERT_TRUE(in.good());
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["$defs"].size(), 5u);
}
