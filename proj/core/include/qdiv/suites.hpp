#pragma once

// Ensemble-level verification suites. Each suite runs a seeded family of
// random instances through the harness and aggregates the worst slack per
// property. Results are merged by trial index, so a suite is deterministic
// for a fixed seed regardless of the worker count.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdiv/harness.hpp"

namespace qdiv {

enum class Suite {
  LogConvexity,
  Monotonicity,
  Limits,
  Inequalities,
  Theorem6,
  Theorem9,
  Classical,
  Corollary3,
};

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct SuiteConfig {
  int trials = 200;
  std::uint64_t seed = 0;
  int dim_lo = 2;
  int dim_hi = 6;
  int grid_points = 101;
  int workers = 0;

  void validate() const;
};

/// One aggregated property. `min_slack` is the worst slack over every
/// evaluation; the property passes iff no evaluation had slack < −tolerance.
struct SuiteCheck {
  std::string name;
  double min_slack = 0.0;
  double tolerance = 0.0;
  int evaluations = 0;
  int failures = 0;
  /// Trial index of the worst slack, −1 for deterministic checks.
  int worst_trial = -1;
  bool pass = true;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
};

SuiteResult run_suite(Suite suite, const SuiteConfig& config);

}  // namespace qdiv
