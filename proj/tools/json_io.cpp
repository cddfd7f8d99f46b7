#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "pqc/error.hpp"

namespace pqc::io {

namespace {

double number_field(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw DomainError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

void dump_into(const json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ',';
          out += nl;
        }
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += sep;
        dump_into(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? (indent > 0 ? ", " : ",") : ",";
        if (!flat) {
          out += nl;
          out += pad;
        }
        first = false;
        dump_into(e, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

AlgebraElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw DomainError("element JSON needs an object with 'n' and 'terms'");
  }
  if (!j.at("n").is_number_integer()) throw DomainError("'n' must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 1) throw DomainError("'n' must be positive");
  if (!j.at("terms").is_array()) throw DomainError("'terms' must be an array");
  std::map<Permutation, cplx> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("perm") || !t.at("perm").is_string()) {
      throw DomainError("each term needs a 'perm' string");
    }
    const Permutation p = parse_permutation(t.at("perm").get<std::string>(), n);
    terms[p] += cplx(number_field(t, "re", 0.0), number_field(t, "im", 0.0));
  }
  return AlgebraElement::from_terms(n, std::move(terms));
}

json element_to_json(const AlgebraElement& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms()) {
    terms.push_back({{"perm", to_cycle_string(p)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n", f.degree()}, {"terms", terms}};
}

PauliSum pauli_from_json(const json& j, int n) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("terms")) throw DomainError("Pauli JSON object needs 'terms'");
    if (j.contains("n")) n = j.at("n").get<int>();
    list = &j.at("terms");
  }
  if (!list->is_array()) throw DomainError("Pauli terms must be an array");
  if (n <= 0) {
    for (const auto& t : *list) {
      if (!t.contains("string") || !t.at("string").is_string()) throw DomainError("each Pauli term needs 'string'");
      std::istringstream in(t.at("string").get<std::string>());
      std::string tok;
      while (in >> tok) {
        if (tok.size() > 1) n = std::max(n, std::atoi(tok.c_str() + 1));
      }
    }
  }
  if (n < 1 || n > 64) throw DomainError("Pauli qubit count must lie in 1..64");
  PauliSum out(n);
  for (const auto& t : *list) {
    if (!t.is_object() || !t.contains("string") || !t.at("string").is_string()) {
      throw DomainError("each Pauli term needs 'string'");
    }
    out.add(parse_pauli_string(t.at("string").get<std::string>(), n),
            cplx(number_field(t, "re", 0.0), number_field(t, "im", 0.0)));
  }
  return out;
}

json pauli_to_json(const PauliSum& p) {
  json terms = json::array();
  for (const auto& [s, c] : p.terms()) terms.push_back({{"string", to_string(s)}, {"re", c.real()}, {"im", c.imag()}});
  return terms;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  return {{"re", matrix_to_json(Eigen::MatrixXd(m.real()))}, {"im", matrix_to_json(Eigen::MatrixXd(m.imag()))}};
}

json amplitudes_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json tableau_to_json(const StandardTableau& t) { return t.rows(); }

std::string dump(const json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

}  // namespace pqc::io
