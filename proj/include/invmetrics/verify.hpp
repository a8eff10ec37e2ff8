#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invmetrics/domain.hpp"
#include "invmetrics/spec_json.hpp"

namespace invmetrics::verify {

using Json = spec::Json;

struct SuiteConfig {
  std::string name = "all";
  std::uint64_t seed = 0;
  /// Samples per property (per map for contractibility).
  std::size_t samples = 200;
  /// Absolute tolerance of the inequality checks, scaled by max(1, |rhs|).
  double tolerance = 1e-9;
};

struct Failure {
  std::size_t sample = 0;
  double violation = 0.0;
  std::string message;
  /// Standalone input; replay() reproduces the violation from it.
  Json reproducer;
};

struct Verdict {
  std::string property;
  std::size_t samples_run = 0;
  std::size_t failure_count = 0;
  /// The first few failures, in sample order.
  std::vector<Failure> failures;
  double max_violation = 0.0;
  double tolerance = 0.0;

  bool passed() const { return failure_count == 0; }
};

/// chain, contractibility, normalization, nonusc, oracle, rotation,
/// regularization, examples, all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws InvalidInput for an unknown suite name.
std::vector<Verdict> run_suite(const SuiteConfig& config);

/// m <= s^(p) <= g and gamma <= S^(2p) <= A on Reinhardt and disc samples.
Verdict check_chain(const SuiteConfig& config);

/// d_target(F(a), F(z)) <= d_source(a, z) and the metric analogue with
/// F'(a)X. Throws MapRangeViolation if a sample leaves the target.
Verdict check_contractibility(const std::string& property, const HolomorphicMapSpec& f,
                              const DomainSpec& source, const DomainSpec& target,
                              const SuiteConfig& config);
std::vector<Verdict> check_contractibility_catalog(const SuiteConfig& config);

/// Disc reference values for every kind, orders 1..4, t in {0, 0.1, ..., 0.9}.
Verdict check_normalization(const SuiteConfig& config);

/// On D_(1,2,2): s(0,z) = |z^alpha| < |z^alpha|^(1/2) = s((1/k,0,0),z).
Verdict check_nonusc_witness(const SuiteConfig& config, int k_max = 100);

/// limsup of Green quotients against the Azukawa closed form, 2% relative.
Verdict check_oracle(const SuiteConfig& config);

/// Invariance under coordinatewise rotations.
Verdict check_rotation(const SuiteConfig& config);

/// Slice value 0 against the positive lower bound of the regularized value at
/// the embedded point.
Verdict check_regularization(const SuiteConfig& config);

/// Fixed published values, asserted exactly.
Verdict check_examples(const SuiteConfig& config);

struct Replay {
  double violation = 0.0;
  bool failed = false;
  std::string message;
};

Replay replay(const Json& reproducer);

Json report_json(const SuiteConfig& config, const std::vector<Verdict>& verdicts);
std::string report_text(const SuiteConfig& config, const std::vector<Verdict>& verdicts);

}  // namespace invmetrics::verify
