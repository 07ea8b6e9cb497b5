#include "qdiv/cli/report.hpp"

#include <algorithm>

namespace qdiv::cli {

void Report::finalize() {
  pass = std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json values = Json::array();
    for (double v : c.values) values.push_back(number_or_null(v));
    checks.push_back({{"name", c.name},
                      {"values", std::move(values)},
                      {"slack", c.slack ? number_or_null(*c.slack) : Json(nullptr)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  const Tolerances& t = report.tolerances;
  return {{"command", report.command},
          {"tolerances",
           {{"hermiticity", t.hermiticity},
            {"recon", t.recon},
            {"support_clip", t.support_clip},
            {"trace", t.trace}}},
          {"seed", report.seed ? Json(*report.seed) : Json(nullptr)},
          {"checks", std::move(checks)},
          {"pass", report.pass},
          {"wall_time", report.wall_time},
          {"data", report.data}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::vector<std::string>>();
  const Json& t = j.at("tolerances");
  r.tolerances.hermiticity = t.at("hermiticity").get<double>();
  r.tolerances.recon = t.at("recon").get<double>();
  r.tolerances.support_clip = t.at("support_clip").get<double>();
  r.tolerances.trace = t.at("trace").get<double>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    ReportCheck check;
    check.name = c.at("name").get<std::string>();
    for (const auto& v : c.at("values")) check.values.push_back(number_from_json(v));
    if (!c.at("slack").is_null()) check.slack = c.at("slack").get<double>();
    check.tolerance = c.at("tolerance").get<double>();
    check.pass = c.at("pass").get<bool>();
    r.checks.push_back(std::move(check));
  }
  r.pass = j.at("pass").get<bool>();
  r.wall_time = j.at("wall_time").get<double>();
  r.data = j.at("data");
  return r;
}

namespace {

std::string_view kind_name(CounterexampleKind k) {
  return k == CounterexampleKind::Recoverability ? "recoverability" : "pinching_concavity";
}

}  // namespace

Json to_json(const CounterexampleRecord& record) {
  Json kraus = Json::array();
  for (const auto& k : record.kraus) kraus.push_back(matrix_to_json(k));
  return {{"kind", kind_name(record.kind)},
          {"label", record.label},
          {"A", matrix_to_json(record.a)},
          {"B", matrix_to_json(record.b)},
          {"channel", {{"kraus", std::move(kraus)}}},
          {"parameters", record.parameters},
          {"lhs", number_or_null(record.lhs)},
          {"rhs", number_or_null(record.rhs)},
          {"margin", number_or_null(record.margin)},
          {"violation", record.violation},
          {"seed", record.seed ? Json(*record.seed) : Json(nullptr)}};
}

CounterexampleRecord record_from_json(const Json& j) {
  CounterexampleRecord r;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "recoverability") {
    r.kind = CounterexampleKind::Recoverability;
  } else if (kind == "pinching_concavity") {
    r.kind = CounterexampleKind::PinchingConcavity;
  } else {
    throw InputError("record: unknown kind " + kind);
  }
  r.label = j.at("label").get<std::string>();
  r.a = matrix_from_json(j.at("A"));
  r.b = matrix_from_json(j.at("B"));
  for (const auto& k : j.at("channel").at("kraus")) r.kraus.push_back(matrix_from_json(k));
  r.parameters = j.at("parameters").get<std::map<std::string, double>>();
  r.lhs = number_from_json(j.at("lhs"));
  r.rhs = number_from_json(j.at("rhs"));
  r.margin = number_from_json(j.at("margin"));
  r.violation = j.at("violation").get<bool>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace qdiv::cli
