#include "invmetrics/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "invmetrics/demos.hpp"
#include "invmetrics/domain.hpp"
#include "invmetrics/spec_json.hpp"
#include "invmetrics/verify.hpp"

namespace invmetrics::cli {

namespace {

struct EvalArgs {
  std::string spec_file;
  std::string metric;
  std::optional<int> order;
  std::string base;
  std::string target;
  std::string dir;
  std::string format = "json";
  bool allow_bounds = false;
};

struct DemoArgs {
  std::string name;
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
  std::string report;
};

spec::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return spec::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  if (a.target.empty() == a.dir.empty()) {
    err << "error: give exactly one of --target and --dir\n";
    return kUsage;
  }
  const bool function_context = !a.target.empty();
  try {
    const DomainSpec d = spec::parse_domain(read_json_file(a.spec_file));
    const MetricKind kind = spec::parse_metric_kind(a.metric, a.order, function_context);
    if (kind.is_function() != function_context) {
      err << "error: " << kind.name() << (kind.is_function() ? " needs --target\n" : " needs --dir\n");
      return kUsage;
    }
    const ComplexVector base = spec::parse_point(a.base);
    const ComplexVector v = spec::parse_point(function_context ? a.target : a.dir);
    const MetricValue value = evaluate(d, kind, base, v);
    if (a.format == "csv") {
      out << "lower,upper,status,citation\n"
          << demos::format_number(value.lower) << ',' << demos::format_number(value.upper) << ','
          << to_string(value.status) << ',' << csv_field(value.citation) << '\n';
    } else {
      out << spec::metric_value_to_json(value).dump() << '\n';
    }
    if (!value.is_exact() && !a.allow_bounds) return kBoundsOnly;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

int cmd_demo(const DemoArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const demos::Table t = demos::run_demo(a.name);
    if (a.out.empty()) {
      demos::write_csv(out, t);
    } else {
      std::ofstream f(a.out, std::ios::binary);
      if (!f) {
        err << "error: cannot write '" << a.out << "'\n";
        return kUsage;
      }
      demos::write_csv(f, t);
    }
    err << a.name << ": " << t.summary << (t.holds ? " [reproduced]" : " [NOT reproduced]") << '\n';
    return t.holds ? kOk : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput ? kUsage : 1;
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!verify::is_suite(a.suite)) {
    err << "error: unknown suite '" << a.suite << "'\n";
    return kUsage;
  }
  verify::SuiteConfig config;
  config.name = a.suite;
  config.samples = a.samples;
  if (a.seed) {
    config.seed = *a.seed;
  } else if (const char* env = std::getenv("INVMETRICS_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: INVMETRICS_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }
  std::vector<verify::Verdict> verdicts;
  try {
    verdicts = verify::run_suite(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  if (!a.report.empty()) {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << a.report << "'\n";
      return kUsage;
    }
    f << verify::report_json(config, verdicts).dump(2) << '\n';
  }
  out << verify::report_text(config, verdicts);
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed(); });
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainViolation:
    case ErrorKind::RegionViolation:
    case ErrorKind::SingularPoint:
      return kDomain;
    default:
      return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant functions and pseudometrics on model domains"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one invariant at a base point");
  eval->add_option("spec", ea.spec_file, "Domain spec JSON file")->required();
  eval->add_option("--metric", ea.metric,
                   "mobius, caratheodory, green, azukawa, sibony, sibony-function, sibony-metric")
      ->required();
  eval->add_option("--order", ea.order, "Order of the Sibony function / pseudometric");
  eval->add_option("--base", ea.base, "Base point, entries re:im separated by commas")->required();
  eval->add_option("--target", ea.target, "Target point (function kinds)");
  eval->add_option("--dir", ea.dir, "Direction (metric kinds)");
  eval->add_option("--format", ea.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  eval->add_flag("--allow-bounds", ea.allow_bounds, "Exit 0 on interval answers");

  DemoArgs da;
  auto* demo = app.add_subcommand("demo", "Write a CSV table reproducing one phenomenon");
  demo->add_option("name", da.name, "nonusc, regularization, increasing, chain, balanced, hartogs-gap")->required();
  demo->add_option("--out", da.out, "Output CSV file (stdout if omitted)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run the seeded property suites");
  ver->add_option("--suite", va.suite, "Suite name or all");
  ver->add_option("--seed", va.seed, "Seed (default: INVMETRICS_SEED or 0)");
  ver->add_option("--samples", va.samples, "Samples per property")->check(CLI::PositiveNumber);
  ver->add_option("--report", va.report, "Write the JSON report here");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (eval->parsed()) return cmd_eval(ea, out, err);
  if (demo->parsed()) return cmd_demo(da, out, err);
  return cmd_verify(va, out, err);
}

}  // namespace invmetrics::cli
