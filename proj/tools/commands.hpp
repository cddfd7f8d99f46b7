#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqc/error.hpp"

namespace pqc::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kResource = 3, kVerification = 4 };

struct RunConfig {
  std::string command;
  int n = 0;
  int d = 2;
  int k = 2;
  double t = 1.0;
  double eps = 1e-3;
  std::uint64_t seed = 1;
  std::string method = "exact";  // exact, lcu-swap, lcu-pauli
  std::string format;            // json or csv; empty picks the command default
  ResourceCaps caps;
  std::string f_path;
  std::string g_path;
  std::string pauli_path;
  std::string lambda;
  std::string perm;
  std::string u;
  std::string v;
  std::string suite = "all";
  std::string out_path;
  int terms = 0;  // random elements: 0 picks the command default
  int n_min = 4;
  int n_max = 7;
  bool timing = true;
};

/// Raised by commands whose built-in checks fail; maps to exit code 4.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command, writing the result to out and diagnostics to err.
/// Domain errors give exit 2, resource caps 3, failed checks 4.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace pqc::cli
