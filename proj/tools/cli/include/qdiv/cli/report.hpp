#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdiv/cli/json_io.hpp"

namespace qdiv::cli {

struct ReportCheck {
  std::string name;
  std::vector<double> values;
  std::optional<double> slack;
  double tolerance = 0.0;
  bool pass = true;
};

/// Machine-readable outcome of one command. `data` carries command-specific
/// payload such as curve values or counterexample records.
struct Report {
  std::vector<std::string> command;
  Tolerances tolerances;
  std::optional<std::uint64_t> seed;
  std::vector<ReportCheck> checks;
  bool pass = true;
  double wall_time = 0.0;
  Json data = Json::object();

  /// Recomputes `pass` from the checks.
  void finalize();
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

Json to_json(const CounterexampleRecord& record);
CounterexampleRecord record_from_json(const Json& j);

}  // namespace qdiv::cli
