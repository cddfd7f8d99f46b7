#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json_io.hpp"
#include "pqc/fourier.hpp"
#include "pqc/lcu.hpp"
#include "pqc/pauli.hpp"
#include "pqc/yor.hpp"
#include "pqc/young_basis.hpp"

namespace pqc::cli {

using io::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Eigen::VectorXcd random_table(int n, std::uint64_t seed, const ResourceCaps& caps) {
  if (n < 1 || n > 20 || factorial(n) > caps.factorial) {
    throw ResourceError("S_" + std::to_string(n) + " exceeds the factorial cap " + std::to_string(caps.factorial));
  }
  std::mt19937_64 rng(seed);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(factorial(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = 2.0 * unit_uniform(rng) - 1.0;
    const double im = 2.0 * unit_uniform(rng) - 1.0;
    v(i) = {re, im};
  }
  return v;
}

json header(const std::string& command) { return {{"schema_version", io::kSchemaVersion}, {"command", command}}; }

std::string format_or(const RunConfig& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv" && f != "text") throw DomainError("unknown format '" + f + "'");
  return f;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void need_n(const RunConfig& c) {
  if (c.n < 1) throw DomainError("--n must be a positive integer");
}

struct BasisLabel {
  Partition lambda;
  int tableau_index = 0;
  int weight_index = 0;
};

// "(3+1,0,0)": partition, tableau index, weight index.
BasisLabel parse_label(std::string text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw DomainError("basis label must look like (3+1,tableau,weight), got '" + text + "'");
  }
  s = s.substr(1, s.size() - 2);
  const auto last = s.rfind(',');
  const auto mid = last == std::string::npos ? std::string::npos : s.rfind(',', last - 1);
  if (mid == std::string::npos) throw DomainError("basis label needs three fields: '" + text + "'");
  BasisLabel out;
  out.lambda = parse_partition(s.substr(0, mid));
  try {
    out.tableau_index = std::stoi(s.substr(mid + 1, last - mid - 1));
    out.weight_index = std::stoi(s.substr(last + 1));
  } catch (const std::logic_error&) {
    throw DomainError("basis label indices must be integers: '" + text + "'");
  }
  return out;
}

const YoungBasisVector& pick(const std::vector<YoungBasisVector>& basis, const std::string& label_text, int n) {
  if (label_text.empty()) return basis.front();
  const BasisLabel label = parse_label(label_text);
  if (label.lambda.size() != n) throw DomainError("basis label partition is not a partition of n");
  const int i = find_basis_vector(basis, label.lambda, label.tableau_index, label.weight_index);
  if (i < 0) throw DomainError("no Young basis vector " + label_text);
  return basis[static_cast<std::size_t>(i)];
}

json label_json(const YoungBasisVector& b) {
  return {{"lambda", to_string(b.lambda)},
          {"tableau", io::tableau_to_json(b.tableau)},
          {"tableau_index", b.tableau_index},
          {"weight_index", b.weight_index}};
}

AlgebraElement element_or_random(const RunConfig& c) {
  if (!c.f_path.empty()) return io::element_from_json(io::read_json_file(c.f_path));
  need_n(c);
  if (c.k < 2 || c.k > c.n) throw DomainError("--k must satisfy 2 <= k <= n");
  const auto pool = count_k_local(c.n, c.k);
  const int terms = c.terms > 0 ? c.terms : static_cast<int>(std::min<std::uint64_t>(6, pool));
  return random_hermitian_k_local(c.n, c.k, terms, c.seed);
}

json cmd_dims(const RunConfig& c, std::string& csv) {
  need_n(c);
  if (c.d < 1) throw DomainError("--d must be positive");
  if (c.n > 30) throw ResourceError("dims supports n <= 30");
  const auto report = schur_weyl_dimension_check(c.n, c.d);
  json j = header("dims");
  j["n"] = c.n;
  j["d"] = c.d;
  json rows = json::array();
  csv = "lambda,specht_dim,weyl_dim,product\n";
  for (const auto& r : report.rows) {
    rows.push_back({{"lambda", to_string(r.lambda)},
                    {"specht_dim", r.specht_dim},
                    {"weyl_dim", r.weyl_dim},
                    {"product", r.specht_dim * r.weyl_dim}});
    csv += to_string(r.lambda) + "," + std::to_string(r.specht_dim) + "," + std::to_string(r.weyl_dim) + "," +
           std::to_string(r.specht_dim * r.weyl_dim) + "\n";
  }
  csv += "total,,," + std::to_string(report.total) + "\n";
  j["rows"] = rows;
  j["total"] = report.total;
  j["expected"] = report.expected;
  j["consistent"] = report.ok();
  if (c.n % 2 == 0 && c.n >= 4) {
    // Two-row rectangle: exact dimension next to 2^m / (m+1), both printed.
    const int m = c.n / 2;
    const auto dim = hook_length_dimension(Partition({m, m}));
    const double rhs = std::ldexp(1.0, m) / (m + 1);
    j["two_row_bound"] = {{"m", m}, {"specht_dim", dim}, {"rhs", rhs}, {"strict_less_holds", dim < rhs}};
  }
  if (!report.ok()) throw VerificationFailure(io::dump(j) + "\nSchur-Weyl dimension sum differs from d^n");
  return j;
}

json cmd_irrep(const RunConfig& c, std::string& csv) {
  if (c.lambda.empty() || c.perm.empty()) throw DomainError("irrep needs --lambda and --perm");
  const Partition lambda = parse_partition(c.lambda);
  const Permutation p = parse_permutation(c.perm, lambda.size());
  const auto& rep = cached_rep(lambda);
  const Eigen::MatrixXd m = rep(p);
  json j = header("irrep");
  j["lambda"] = to_string(lambda);
  j["perm"] = to_cycle_string(p);
  j["one_line"] = to_one_line_string(p);
  j["dimension"] = rep.dimension();
  json tabs = json::array();
  for (const auto& t : rep.tableaux()) tabs.push_back(io::tableau_to_json(t));
  j["tableaux"] = tabs;
  j["matrix"] = io::matrix_to_json(m);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) csv += (col ? "," : "") + g17(m(r, col));
    csv += "\n";
  }
  return j;
}

json cmd_fft(const RunConfig& c) {
  int n = 0;
  Eigen::VectorXcd table;
  FourierCoefficients naive;
  TransformStats naive_stats;
  double naive_time = 0.0;
  std::string input;
  if (!c.f_path.empty()) {
    const AlgebraElement f = io::element_from_json(io::read_json_file(c.f_path));
    n = f.degree();
    table = to_dense(f, c.caps);
    const auto start = std::chrono::steady_clock::now();
    naive = fourier_naive(f, &naive_stats, c.caps);
    naive_time = seconds_since(start);
    input = "element";
  } else {
    need_n(c);
    n = c.n;
    table = random_table(n, c.seed, c.caps);
    const auto start = std::chrono::steady_clock::now();
    naive = fourier_naive_dense(n, table, &naive_stats, c.caps);
    naive_time = seconds_since(start);
    input = "random";
  }
  TransformStats fft_stats;
  const auto start = std::chrono::steady_clock::now();
  const FourierCoefficients fast = fourier_fft(n, table, &fft_stats, c.caps);
  const double fft_time = seconds_since(start);
  const double diff = max_abs_difference(naive, fast);

  json j = header("fft");
  j["n"] = n;
  j["input"] = input;
  j["naive_ops"] = naive_stats.ops;
  j["fft_ops"] = fft_stats.ops;
  j["max_abs_diff"] = diff;
  j["consistent"] = diff <= 1e-9;
  json blocks = json::array();
  for (const auto& b : fast.blocks) {
    blocks.push_back({{"lambda", to_string(b.lambda)}, {"dimension", b.matrix.rows()}, {"matrix", io::matrix_to_json(b.matrix)}});
  }
  j["blocks"] = blocks;
  if (c.timing) j["timing"] = {{"naive_wall_time", naive_time}, {"fft_wall_time", fft_time}};
  if (diff > 1e-9) throw VerificationFailure(io::dump(j) + "\nfast and naive transforms disagree");
  return j;
}

json cmd_convolve(const RunConfig& c) {
  if (c.f_path.empty() || c.g_path.empty()) throw DomainError("convolve needs --f and --g");
  const AlgebraElement f = io::element_from_json(io::read_json_file(c.f_path));
  const AlgebraElement g = io::element_from_json(io::read_json_file(c.g_path));
  if (f.degree() != g.degree()) throw SizeMismatch("--f and --g live in different symmetric groups");
  json j = header("convolve");
  j["result"] = io::element_to_json(convolve(f, g));
  if (f.degree() <= 20 && factorial(f.degree()) <= c.caps.factorial) {
    j["convolution_theorem_deviation"] = convolution_theorem_check(f, g, c.caps);
  }
  return j;
}

json cmd_young_basis(const RunConfig& c) {
  need_n(c);
  const auto basis = young_basis(c.n, c.d, c.caps);
  const auto dim = static_cast<Eigen::Index>(basis.front().vector.dimension());
  Eigen::MatrixXcd v(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = basis[i].vector.amplitudes();
  const double gram = (v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
  double jm = 0.0;
  for (int k = 2; k <= c.n; ++k) {
    const Eigen::MatrixXcd xk = pi_tilde_dense(jucys_murphy(c.n, k), c.d, c.caps);
    for (const auto& b : basis) {
      jm = std::max(jm, (xk * b.vector.amplitudes() - content(b.tableau, k) * b.vector.amplitudes()).norm());
    }
  }
  json j = header("young-basis");
  j["n"] = c.n;
  j["d"] = c.d;
  j["count"] = basis.size();
  j["gram_error"] = gram;
  j["jm_residual"] = jm;
  json vecs = json::array();
  for (const auto& b : basis) {
    json rec = label_json(b);
    rec["weight"] = b.weight;
    rec["amplitudes"] = io::amplitudes_to_json(b.vector.amplitudes());
    vecs.push_back(std::move(rec));
  }
  j["vectors"] = vecs;
  if (gram > 1e-9 || jm > 1e-9) throw VerificationFailure(io::dump(j) + "\nYoung basis failed its checks");
  return j;
}

json cmd_matelem(const RunConfig& c) {
  if (c.method != "exact" && c.method != "lcu-swap" && c.method != "lcu-pauli") {
    throw DomainError("--method must be exact, lcu-swap or lcu-pauli");
  }
  if (!(c.eps > 0.0 && c.eps < 1.0)) throw DomainError("--eps must lie in (0, 1)");
  if (c.t < 0.0) throw DomainError("--t must be non-negative");
  json j = header("matelem");
  j["method"] = c.method;
  j["t"] = c.t;
  j["eps"] = c.eps;

  if (!c.pauli_path.empty()) {
    if (c.method != "lcu-pauli") throw DomainError("--pauli input needs --method lcu-pauli");
    const PauliSum h = io::pauli_from_json(io::read_json_file(c.pauli_path), c.n);
    const int n = h.qubits();
    const auto basis = young_basis(n, 2, c.caps);
    const auto& u = pick(basis, c.u, n);
    const auto& v = pick(basis, c.v, n);
    const ExactEvolution evo(pauli_dense(h, c.caps));
    const cplx oracle = evo.matrix_element(u.vector.amplitudes(), v.vector.amplitudes(), c.t);
    const auto r = matrix_element_pauli(u.vector, v.vector, h, c.t, c.eps, c.caps);
    j["n"] = n;
    j["d"] = 2;
    j["u"] = label_json(u);
    j["v"] = label_json(v);
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["oracle_re"] = oracle.real();
    j["oracle_im"] = oracle.imag();
    j["abs_err"] = std::abs(r.value - oracle);
    j["M"] = r.plan.M;
    j["K"] = r.plan.K;
    j["pauli_applications"] = r.gates.actual;
    j["single_qubit_paulis"] = r.gates.single_qubit_paulis;
    j["closed_form_estimate"] = r.gates.closed_form_estimate;
    j["segment_terms"] = r.segment_terms;
    j["pauli_one_norm"] = h.one_norm();
    return j;
  }

  const AlgebraElement f = element_or_random(c);
  const int n = f.degree();
  if (!f.is_hermitian()) throw DomainError("matelem needs a Hermitian element (c(s^-1) = conj c(s))");
  const auto basis = young_basis(n, c.d, c.caps);
  const auto& u = pick(basis, c.u, n);
  const auto& v = pick(basis, c.v, n);
  const cplx oracle = exact_matrix_element(u, v, f, c.t, c.caps);
  j["n"] = n;
  j["d"] = c.d;
  j["u"] = label_json(u);
  j["v"] = label_json(v);
  j["element"] = io::element_to_json(f);
  j["oracle_re"] = oracle.real();
  j["oracle_im"] = oracle.imag();

  cplx value = oracle;
  if (c.method == "lcu-swap") {
    const auto r = matrix_element(u.vector, v.vector, f, c.t, c.eps, c.caps);
    value = r.value;
    j["M"] = r.plan.M;
    j["K"] = r.plan.K;
    j["K_closed_form"] = r.plan.K_closed_form;
    j["M_scaling"] = r.plan.M_scaling;
    j["swap_count"] = r.gates.actual;
    j["k2MK_bound"] = r.gates.k2MK_bound;
    j["predicted_swap_gates"] = r.plan.predicted_swap_gates;
    j["closed_form_estimate"] = r.gates.closed_form_estimate;
    j["segment_terms"] = r.segment_terms;
  } else if (c.method == "lcu-pauli") {
    if (c.d != 2) throw DomainError("lcu-pauli needs --d 2");
    const auto r = matrix_element_pauli(u.vector, v.vector, f, c.t, c.eps, c.caps);
    const auto swap = matrix_element(u.vector, v.vector, f, c.t, c.eps, c.caps);
    value = r.value;
    j["M"] = r.plan.M;
    j["K"] = r.plan.K;
    j["pauli_applications"] = r.gates.actual;
    j["single_qubit_paulis"] = r.gates.single_qubit_paulis;
    j["L"] = r.gates.L;
    j["closed_form_estimate"] = r.gates.closed_form_estimate;
    j["segment_terms"] = r.segment_terms;
    j["swap_value_re"] = swap.value.real();
    j["swap_value_im"] = swap.value.imag();
    j["cross_path_err"] = std::abs(r.value - swap.value);
  }
  j["value_re"] = value.real();
  j["value_im"] = value.imag();
  j["abs_err"] = std::abs(value - oracle);
  j["within_eps"] = std::abs(value - oracle) <= c.eps;
  return j;
}

struct BenchRow {
  int n = 0;
  std::uint64_t fft_ops = 0;
  double wall = 0.0;
  std::uint64_t gates = 0;
  double closed_form = 0.0;
  std::uint64_t k2mk = 0;
  std::uint64_t M = 0;
  int K = 0;
  std::size_t terms = 0;
};

json cmd_bench(const RunConfig& c, std::string& csv) {
  if (c.n_min < 2 || c.n_max < c.n_min) throw DomainError("bench needs 2 <= n-min <= n-max");
  if (c.k < 2 || c.k > c.n_min) throw DomainError("--k must satisfy 2 <= k <= n-min");
  if (!(c.t > 0.0)) throw DomainError("--t must be positive");
  std::vector<BenchRow> rows;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    BenchRow row;
    row.n = n;
    const Eigen::VectorXcd table = random_table(n, c.seed + static_cast<std::uint64_t>(n), c.caps);
    TransformStats stats;
    const auto start = std::chrono::steady_clock::now();
    fourier_fft(n, table, &stats, c.caps);
    row.wall = seconds_since(start);
    row.fft_ops = stats.ops;

    // Full k-local support unless --terms limits it.
    const auto pool = count_k_local(n, c.k);
    const int terms = c.terms > 0 ? std::min<int>(c.terms, static_cast<int>(pool)) : static_cast<int>(pool);
    const AlgebraElement f = random_hermitian_k_local(n, c.k, terms, c.seed + static_cast<std::uint64_t>(n));
    const SimulationPlan p = plan(f, c.t, c.eps);
    const LcuSegment seg = build_segment(f, p.delta_t, p.K, c.caps);
    const GateReport g = gate_count_report(p, seg, f);
    row.gates = g.actual;
    row.closed_form = g.closed_form_estimate;
    row.k2mk = g.k2MK_bound;
    row.M = p.M;
    row.K = p.K;
    row.terms = seg.terms.size();
    rows.push_back(row);
  }

  // c fitted on the first row: fft_ops(n) >= n! n^2 / c.
  const double c_fit = static_cast<double>(factorial(rows.front().n)) * rows.front().n * rows.front().n /
                       static_cast<double>(rows.front().fft_ops);
  bool ratio_increasing = true;
  bool factorial_floor = true;
  bool under_estimate = true;
  bool under_k2mk = true;
  json jrows = json::array();
  csv = "n,classical_fft_ops,classical_wall_time,lcu_swap_gates,closed_form_estimate,k2MK_bound,M,K,segment_terms\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double ratio = static_cast<double>(r.fft_ops) / static_cast<double>(std::max<std::uint64_t>(r.gates, 1));
    if (i > 0) {
      const auto& q = rows[i - 1];
      const double prev = static_cast<double>(q.fft_ops) / static_cast<double>(std::max<std::uint64_t>(q.gates, 1));
      ratio_increasing = ratio_increasing && ratio > prev;
    }
    const double floor = static_cast<double>(factorial(r.n)) * r.n * r.n / c_fit;
    factorial_floor = factorial_floor && static_cast<double>(r.fft_ops) >= floor * (1.0 - 1e-12);
    under_estimate = under_estimate && static_cast<double>(r.gates) <= r.closed_form;
    under_k2mk = under_k2mk && r.gates <= r.k2mk;
    jrows.push_back({{"n", r.n},
                     {"classical_fft_ops", r.fft_ops},
                     {"classical_wall_time", c.timing ? r.wall : 0.0},
                     {"lcu_swap_gates", r.gates},
                     {"closed_form_estimate", r.closed_form},
                     {"k2MK_bound", r.k2mk},
                     {"M", r.M},
                     {"K", r.K},
                     {"segment_terms", r.terms},
                     {"ratio", ratio}});
    csv += std::to_string(r.n) + "," + std::to_string(r.fft_ops) + "," + g17(c.timing ? r.wall : 0.0) + "," +
           std::to_string(r.gates) + "," + g17(r.closed_form) + "," + std::to_string(r.k2mk) + "," +
           std::to_string(r.M) + "," + std::to_string(r.K) + "," + std::to_string(r.terms) + "\n";
  }
  json j = header("bench");
  j["k"] = c.k;
  j["t"] = c.t;
  j["eps"] = c.eps;
  j["seed"] = c.seed;
  j["rows"] = jrows;
  j["fitted_c"] = c_fit;
  j["checks"] = {{"ratio_strictly_increasing", ratio_increasing},
                 {"fft_ops_above_factorial_floor", factorial_floor},
                 {"gates_below_closed_form", under_estimate},
                 {"gates_below_k2MK", under_k2mk}};
  if (!(ratio_increasing && factorial_floor && under_estimate && under_k2mk)) {
    throw VerificationFailure((c.format == "json" ? io::dump(j) : csv) + "\nbench checks failed: " +
                              j["checks"].dump());
  }
  return j;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto fmt = format_or(c, "text");
  const auto results = run_suite(c.suite, c.seed);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (fmt == "json") {
    json j = header("verify");
    j["suite"] = c.suite;
    json checks = json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["checks"] = checks;
    j["passed"] = all;
    out << io::dump(j) << "\n";
  } else {
    for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    out << (all ? "ok" : "FAILED") << " (" << results.size() << " checks)\n";
  }
  return all ? kOk : kVerification;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  std::string csv;
  json j;
  std::string fallback = "json";
  if (c.command == "dims") {
    j = cmd_dims(c, csv);
  } else if (c.command == "irrep") {
    j = cmd_irrep(c, csv);
  } else if (c.command == "fft") {
    j = cmd_fft(c);
  } else if (c.command == "convolve") {
    j = cmd_convolve(c);
  } else if (c.command == "young-basis") {
    j = cmd_young_basis(c);
  } else if (c.command == "matelem") {
    j = cmd_matelem(c);
  } else if (c.command == "bench") {
    fallback = "csv";
    j = cmd_bench(c, csv);
  } else if (c.command == "verify") {
    return cmd_verify(c, out);
  } else {
    throw DomainError("unknown command '" + c.command + "'");
  }
  const std::string fmt = format_or(c, fallback);
  if (fmt == "csv") {
    if (csv.empty()) throw DomainError("command '" + c.command + "' has no CSV form");
    out << csv;
  } else {
    out << io::dump(j) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kOk;
  try {
    code = dispatch(config, buffer);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "resource cap: out of memory\n";
    return kResource;
  }
  if (config.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "error: cannot write '" << config.out_path << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace pqc::cli
