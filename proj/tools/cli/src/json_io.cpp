#include "qdiv/cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace qdiv::cli {

namespace {

Index read_extent(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("matrix: missing integer field \"") + key + "\"");
  }
  const auto v = j.at(key).get<long long>();
  if (v < 1) throw InputError(std::string("matrix: \"") + key + "\" must be positive");
  return static_cast<Index>(v);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("matrix: expected an object");
  const Index rows = read_extent(j, "rows");
  const Index cols = read_extent(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw InputError("matrix: missing \"data\" array");
  }
  const Json& data = j.at("data");
  if (static_cast<Index>(data.size()) != rows) {
    throw InputError("matrix: \"data\" row count disagrees with \"rows\"");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = data.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InputError("matrix: row " + std::to_string(i) + " has the wrong length");
    }
    for (Index k = 0; k < cols; ++k) {
      const Json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw InputError("matrix: entries must be [re, im] number pairs");
      }
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

Json channel_to_json(const KrausChannel& channel) {
  Json kraus = Json::array();
  for (const auto& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  return {{"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array()) {
    throw InputError("channel: expected {\"kraus\": [matrix, ...]}");
  }
  std::vector<Matrix> ops;
  for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
  return KrausChannel(std::move(ops));
}

Json instance_to_json(const ProblemInstance& inst) {
  Json j{{"label", inst.label}, {"A", matrix_to_json(inst.a.matrix())},
         {"B", matrix_to_json(inst.b.matrix())}};
  if (inst.channel) j["channel"] = channel_to_json(*inst.channel);
  return j;
}

ProblemInstance instance_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw InputError("instance: expected an object with \"A\" and \"B\"");
  }
  std::string label = "instance";
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw InputError("instance: \"label\" must be a string");
    label = j.at("label").get<std::string>();
  }
  std::optional<KrausChannel> channel;
  if (j.contains("channel") && !j.at("channel").is_null()) {
    channel = channel_from_json(j.at("channel"));
  }
  ProblemInstance inst{label, DensityMatrix(matrix_from_json(j.at("A")), tol),
                       DensityMatrix(matrix_from_json(j.at("B")), tol), std::move(channel)};
  inst.validate();
  return inst;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

ProblemInstance load_instance(const std::string& source, const Tolerances& tol) {
  if (source == "paper-example") return paper_example();
  return instance_from_json(read_json_file(source), tol);
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_from_json(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

}  // namespace qdiv::cli
