#pragma once

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "pqc/group_algebra.hpp"
#include "pqc/pauli.hpp"
#include "pqc/quditsim.hpp"
#include "pqc/young.hpp"

namespace pqc::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"n": int, "terms": [{"perm": "(1 2)", "re": float, "im": float}]}.
/// Repeated permutations are summed. Throws DomainError on malformed input.
AlgebraElement element_from_json(const json& j);
json element_to_json(const AlgebraElement& f);

/// Either [{"string": "X1 X2", "re": .., "im": ..}] or {"n": .., "terms": [...]}.
/// For the bare array form the qubit count is n, or the largest index when n is 0.
PauliSum pauli_from_json(const json& j, int n = 0);
json pauli_to_json(const PauliSum& p);

/// Reads and parses a file; I/O and syntax errors become DomainError.
json read_json_file(const std::string& path);

json matrix_to_json(const Eigen::MatrixXd& m);
/// {"re": rows, "im": rows}
json matrix_to_json(const Eigen::MatrixXcd& m);
/// Array of [re, im] pairs.
json amplitudes_to_json(const Eigen::VectorXcd& v);
json tableau_to_json(const StandardTableau& t);

/// Serializes with floating-point values printed as %.17g. Object keys come
/// out sorted, so equal documents give equal text.
std::string dump(const json& j, int indent = 2);

}  // namespace pqc::io
