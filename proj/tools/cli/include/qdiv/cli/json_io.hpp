#pragma once

// JSON encoding of matrices, channels and problem instances.
//
// A matrix is {"rows": n, "cols": m, "data": [[[re, im], ...], ...]}. Numbers
// are written with round-trip precision, so a saved matrix reloads exactly.

#include <string>

#include <json.hpp>

#include "qdiv/harness.hpp"

namespace qdiv::cli {

using Json = nlohmann::json;

/// Malformed document or file; maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const Json& j);

Json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const Json& j, const Tolerances& tol = {});

/// Reads an instance file, or the built-in "paper-example".
ProblemInstance load_instance(const std::string& source, const Tolerances& tol = {});

Json read_json_file(const std::string& path);

/// Non-finite values are written as null and read back as +inf.
Json number_or_null(double x);
double number_from_json(const Json& j);

}  // namespace qdiv::cli
