#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json_io.hpp"

using namespace pqc::cli;
using pqc::io::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(RunConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  c.timing = false;
  return c;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/pqc_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dims") {
  auto c = config("dims");
  c.n = 6;
  const auto r = invoke(c);
  REQUIRE(r.code == kOk);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["total"] == 64);
  CHECK(j["rows"].size() == 4);
  CHECK(j["two_row_bound"]["specht_dim"] == 5);
  c.n = 8;
  c.format = "csv";
  const auto csv = invoke(c);
  CHECK(csv.out.find("4+4,14,1,14") != std::string::npos);
  CHECK(csv.out.find("total,,,256") != std::string::npos);
}

TEST_CASE("irrep") {
  auto c = config("irrep");
  c.lambda = "3+1";
  c.perm = "(1 2 3)";
  const auto j = json::parse(invoke(c).out);
  CHECK(j["dimension"] == 3);
  CHECK(j["matrix"][1][2].get<double>() == doctest::Approx(std::sqrt(3.0) / 2));
  c.perm = "(1 5)";
  CHECK(invoke(c).code == kUsage);
}

TEST_CASE("fft and convolve") {
  auto c = config("fft");
  c.n = 5;
  auto r = invoke(c);
  REQUIRE(r.code == kOk);
  auto j = json::parse(r.out);
  CHECK(j["consistent"] == true);
  CHECK(j["fft_ops"].get<std::uint64_t>() < j["naive_ops"].get<std::uint64_t>());
  CHECK_FALSE(j.contains("timing"));
  const auto f = temp_file("f.json", R"j({"n": 3, "terms": [{"perm": "()", "re": 1.0}]})j");
  c.n = 0;
  c.f_path = f;
  j = json::parse(invoke(c).out);
  for (const auto& b : j["blocks"]) CHECK(b["dimension"].get<int>() >= 1);
  auto cv = config("convolve");
  cv.f_path = f;
  cv.g_path = temp_file("g.json", R"j({"n": 3, "terms": [{"perm": "(1 2)", "re": 2.0, "im": 1.0}]})j");
  j = json::parse(invoke(cv).out);
  CHECK(j["convolution_theorem_deviation"].get<double>() < 1e-12);
}

TEST_CASE("matelem methods") {
  auto c = config("matelem");
  c.n = 4;
  c.u = "(3+1,0,0)";
  c.v = "(3+1,2,0)";
  for (const char* m : {"exact", "lcu-swap", "lcu-pauli"}) {
    c.method = m;
    const auto r = invoke(c);
    REQUIRE(r.code == kOk);
    const auto j = json::parse(r.out);
    CHECK(j["abs_err"].get<double>() <= c.eps);
    for (const char* key : {"value_re", "value_im", "oracle_re", "oracle_im"}) CHECK(j.contains(key));
    if (c.method != "exact") CHECK((j.contains("M") && j.contains("K")));
    if (c.method == "lcu-swap") {
      CHECK(j["swap_count"].get<std::uint64_t>() <= j["k2MK_bound"].get<std::uint64_t>());
      CHECK(j.contains("closed_form_estimate"));
    }
    if (c.method == "lcu-pauli") CHECK(j["cross_path_err"].get<double>() <= 2 * c.eps);
  }
  c.method = "exact";
  c.t = 0.0;
  c.v = c.u;
  CHECK(json::parse(invoke(c).out)["value_re"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("matelem with a Pauli Hamiltonian") {
  auto c = config("matelem");
  c.method = "lcu-pauli";
  c.n = 3;
  c.u = "(2+1,0,0)";
  c.v = "(2+1,1,0)";
  c.pauli_path = temp_file("h.json", R"j([{"string": "X1 X2", "re": 0.5}, {"string": "Z2 Z3", "re": 0.25}])j");
  const auto r = invoke(c);
  REQUIRE(r.code == kOk);
  CHECK(json::parse(r.out)["abs_err"].get<double>() <= c.eps);
}

TEST_CASE("young-basis export") {
  auto c = config("young-basis");
  c.n = 3;
  c.d = 2;
  const auto j = json::parse(invoke(c).out);
  CHECK(j["count"] == 8);
  const auto& v = j["vectors"][0];
  for (const char* key : {"lambda", "tableau", "weight_index", "amplitudes"}) CHECK(v.contains(key));
}

TEST_CASE("bench") {
  auto c = config("bench");
  c.n_max = 6;
  const auto r = invoke(c);
  REQUIRE(r.code == kOk);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("n,classical_fft_ops,classical_wall_time,lcu_swap_gates,closed_form_estimate", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("verify") {
  auto c = config("verify");
  c.suite = "schur-weyl";
  const auto r = invoke(c);
  CHECK(r.code == kOk);
  CHECK(r.out.find("PASS schur-weyl/n6_d2_pairing") != std::string::npos);
  c.suite = "nope";
  CHECK(invoke(c).code == kUsage);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("exit codes") {
  CHECK(invoke(config("frobnicate")).code == kUsage);
  auto c = config("fft");
  c.n = 8;
  c.caps.factorial = 5040;
  const auto r = invoke(c);
  CHECK(r.code == kResource);
  CHECK_FALSE(r.err.empty());
  auto m = config("matelem");
  m.n = 14;
  m.u = "(13+1,0,0)";
  m.v = m.u;
  CHECK(invoke(m).code == kResource);
  auto bad = config("fft");
  bad.f_path = temp_file("bad.json", "{not json");
  CHECK(invoke(bad).code == kUsage);
  auto eps = config("matelem");
  eps.n = 4;
  eps.method = "lcu-swap";
  eps.eps = 2.0;
  eps.u = "(3+1,0,0)";
  eps.v = eps.u;
  CHECK(invoke(eps).code == kUsage);
}

TEST_CASE("identical configurations give identical bytes") {
  for (const char* cmd : {"dims", "fft", "matelem", "bench", "young-basis"}) {
    auto c = config(cmd);
    c.n = 4;
    c.seed = 99;
    c.n_max = 5;
    c.method = "lcu-swap";
    c.u = "(3+1,0,0)";
    c.v = "(3+1,1,0)";
    const auto a = invoke(c);
    const auto b = invoke(c);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
  }
  auto c = config("fft");
  c.n = 4;
  c.seed = 1;
  const auto one = invoke(c).out;
  c.seed = 2;
  CHECK(one != invoke(c).out);
}

TEST_CASE("output file") {
  auto c = config("dims");
  c.n = 3;
  c.out_path = "/tmp/pqc_test_out.json";
  const auto r = invoke(c);
  CHECK(r.out.empty());
  std::ifstream in(c.out_path);
  CHECK(json::parse(in)["total"] == 8);
}

}
