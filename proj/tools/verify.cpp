#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "commands.hpp"
#include <Eigen/SVD>

#include "pqc/fourier.hpp"
#include "pqc/lcu.hpp"
#include "pqc/pauli.hpp"
#include "pqc/yor.hpp"
#include "pqc/young_basis.hpp"

namespace pqc::cli {

namespace {

using Checks = std::vector<CheckResult>;

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void add(Checks& out, std::string name, bool pass, std::string detail) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

void tolerance(Checks& out, std::string name, double value, double tol) {
  add(out, std::move(name), value <= tol, "max error " + sci(value) + " (tol " + sci(tol) + ")");
}

Permutation random_permutation(int n, std::mt19937_64& rng) { return coset_unrank(n, rng() % factorial(n)); }

AlgebraElement random_element(int n, int terms, std::mt19937_64& rng) {
  std::map<Permutation, cplx> m;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < terms; ++i) m[random_permutation(n, rng)] += cplx(u(rng), u(rng));
  return AlgebraElement::from_terms(n, std::move(m));
}

Checks schur_weyl_suite(std::uint64_t) {
  Checks out;
  bool ok = true;
  std::string bad;
  for (int n = 1; n <= 10; ++n) {
    if (!schur_weyl_dimension_check(n, 2).ok()) ok = false, bad += " (" + std::to_string(n) + ",2)";
  }
  for (int n = 1; n <= 8; ++n) {
    if (!schur_weyl_dimension_check(n, 3).ok()) ok = false, bad += " (" + std::to_string(n) + ",3)";
  }
  add(out, "dimension_sum_equals_d^n", ok, ok ? "n<=10 at d=2, n<=8 at d=3" : "failed at" + bad);

  const auto r = schur_weyl_dimension_check(6, 2);
  std::vector<std::uint64_t> w, s;
  for (const auto& row : r.rows) {
    w.push_back(row.weyl_dim);
    s.push_back(row.specht_dim);
  }
  add(out, "n6_d2_pairing", w == std::vector<std::uint64_t>{7, 5, 3, 1} && s == std::vector<std::uint64_t>{1, 5, 9, 5},
      "weyl (7,5,3,1) x specht (1,5,9,5)");

  ok = true;
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (const auto& l : enumerate_partitions(n)) sum += hook_length_dimension(l) * hook_length_dimension(l);
    ok = ok && sum == factorial(n);
  }
  add(out, "sum_of_squares_is_n!", ok, "n<=8");

  ok = true;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& l : enumerate_partitions(n)) ok = ok && enumerate_standard_tableaux(l).size() == hook_length_dimension(l);
  }
  add(out, "tableau_count_matches_hook_formula", ok, "n<=10");
  return out;
}

Checks permutation_suite(std::uint64_t seed) {
  Checks out;
  bool words = true;
  for (const auto& p : enumerate_all(5)) {
    const auto ts = transposition_decomposition(p);
    const auto w = adjacent_word(p);
    words = words && product_of_transpositions(5, ts) == p && product_of_adjacent(5, w) == p &&
            static_cast<int>(w.size()) <= 10;
  }
  add(out, "decompositions_recompose_S5", words, "transposition and adjacent words, all 120 elements");

  std::mt19937_64 rng(seed);
  bool bij = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto p = random_permutation(std::min(n, 12), rng);
    const auto q = random_permutation(std::min(n, 12), rng);
    const auto pq = p * q;
    std::vector<int> seen(pq.size() + 1, 0);
    for (int i = 1; i <= pq.size(); ++i) ++seen[pq(i)];
    bij = bij && std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; }) &&
          (p * p.inverse()).is_identity();
  }
  add(out, "compose_keeps_bijection", bij, "200 random pairs, n<=12");

  bool census = true;
  bool lower = true;
  bool half = true;
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::uint64_t> count(n + 1, 0);
    for (const auto& p : enumerate_all(n)) ++count[locality(p)];
    for (int l = 2; l <= n; ++l) {
      const auto dl = derangement_count(n, l);
      census = census && dl == count[l];
      const double falling = static_cast<double>(factorial(n)) / static_cast<double>(factorial(n - l));
      lower = lower && static_cast<double>(dl) >= falling / 12.0;
      half = half && static_cast<double>(dl) <= falling / 2.0;
    }
  }
  add(out, "derangement_census", census, "D_l equals the support-size census for 2<=l<=n<=8");
  add(out, "derangement_lower_bound", lower, "D_l >= n!/(12(n-l)!)");
  add(out, "derangement_upper_bound_half", half, "D_l <= n!/(2(n-l)!)");
  // D_2 = n(n-1)/2 exceeds n!/(4(n-2)!) = n(n-1)/4 for every n.
  bool quarter_fails = true;
  for (int n = 2; n <= 8; ++n) quarter_fails = quarter_fails && 4 * derangement_count(n, 2) > factorial(n) / factorial(n - 2);
  add(out, "quarter_upper_bound_counterexample_l2", quarter_fails, "D_2 > n!/(4(n-2)!) confirmed for n<=8");
  return out;
}

Checks yor_suite(std::uint64_t seed) {
  Checks out;
  std::mt19937_64 rng(seed);
  double hom = 0.0;
  double orth = 0.0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& l : enumerate_partitions(n)) {
      const auto& rep = cached_rep(l);
      for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_permutation(n, rng);
        const auto q = random_permutation(n, rng);
        const Eigen::MatrixXd rp = rep(p);
        hom = std::max(hom, (rep(p * q) - rp * rep(q)).cwiseAbs().maxCoeff());
        orth = std::max(orth, (rp.transpose() * rp - Eigen::MatrixXd::Identity(rp.rows(), rp.cols())).cwiseAbs().maxCoeff());
      }
    }
  }
  tolerance(out, "homomorphism", hom, 1e-10);
  tolerance(out, "orthogonality", orth, 1e-10);

  double chars = 0.0;
  double jm = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    const auto all = enumerate_all(n);
    std::vector<std::vector<double>> chi(parts.size());
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (const auto& p : all) chi[a].push_back(cached_rep(parts[a])(p).trace());
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < all.size(); ++i) s += chi[a][i] * chi[b][i];
        chars = std::max(chars, std::abs(s / static_cast<double>(all.size()) - (a == b ? 1.0 : 0.0)));
      }
    }
    for (const auto& l : parts) {
      const auto& rep = cached_rep(l);
      for (int k = 1; k <= n; ++k) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rep.dimension(), rep.dimension());
        for (int i = 1; i < k; ++i) x += rep(Permutation::transposition(n, i, k));
        for (int t = 0; t < rep.dimension(); ++t) x(t, t) -= content(rep.tableaux()[t], k);
        jm = std::max(jm, x.cwiseAbs().maxCoeff());
      }
    }
  }
  tolerance(out, "character_orthogonality", chars, 1e-10);
  tolerance(out, "jucys_murphy_diagonal_contents", jm, 1e-10);
  return out;
}

Checks fourier_suite(std::uint64_t seed) {
  Checks out;
  std::mt19937_64 rng(seed);
  double fft = 0.0;
  for (int n = 3; n <= 7; ++n) {
    Eigen::VectorXcd table(static_cast<Eigen::Index>(factorial(n)));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Eigen::Index i = 0; i < table.size(); ++i) table(i) = {u(rng), u(rng)};
    fft = std::max(fft, max_abs_difference(fourier_fft(n, table), fourier_naive_dense(n, table)));
  }
  tolerance(out, "fft_matches_naive_n3_to_7", fft, 1e-9);

  double inv = 0.0;
  const auto sparse = random_element(4, 6, rng);
  inv = std::max(inv, (fourier_inverse(fourier_naive(sparse)) - to_dense(sparse)).cwiseAbs().maxCoeff());
  const auto dense = random_element(5, 200, rng);
  inv = std::max(inv, (fourier_inverse(fourier_naive(dense)) - to_dense(dense)).cwiseAbs().maxCoeff());
  tolerance(out, "inverse_round_trip", inv, 1e-9);

  double conv = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    conv = std::max(conv, convolution_theorem_check(random_element(4, 4, rng), random_element(4, 4, rng)));
  }
  tolerance(out, "convolution_theorem", conv, 1e-9);

  double parseval = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const auto f = random_element(n, 10, rng);
    double lhs = 0.0;
    for (const auto& [p, c] : f.terms()) lhs += std::norm(c);
    double rhs = 0.0;
    for (const auto& b : fourier_naive(f).blocks) {
      rhs += static_cast<double>(b.matrix.rows()) * b.matrix.squaredNorm();
    }
    rhs /= static_cast<double>(factorial(n));
    parseval = std::max(parseval, std::abs(lhs - rhs) / lhs);
  }
  tolerance(out, "parseval_relative", parseval, 1e-8);

  double pi_hom = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const auto f = random_element(n, 3, rng);
    const auto g = random_element(n, 3, rng);
    pi_hom = std::max(pi_hom, (pi_tilde_dense(convolve(f, g), 2) - pi_tilde_dense(f, 2) * pi_tilde_dense(g, 2)).cwiseAbs().maxCoeff());
  }
  tolerance(out, "pi_tilde_homomorphism", pi_hom, 1e-10);
  return out;
}

Checks young_basis_suite(std::uint64_t seed) {
  Checks out;
  double gram = 0.0;
  double jm = 0.0;
  double block = 0.0;
  bool counts = true;
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {3, 3}, {4, 3}, {5, 3}};
  for (const auto& [n, d] : cases) {
    const auto basis = young_basis(n, d);
    const auto dim = static_cast<Eigen::Index>(basis.front().vector.dimension());
    Eigen::MatrixXcd v(dim, static_cast<Eigen::Index>(basis.size()));
    std::map<Partition, std::uint64_t> per;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      v.col(static_cast<Eigen::Index>(i)) = basis[i].vector.amplitudes();
      ++per[basis[i].lambda];
    }
    gram = std::max(gram, (v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff());
    for (const auto& l : enumerate_partitions(n, d)) counts = counts && per[l] == hook_length_dimension(l) * weyl_dimension(l, d);
    for (int k = 2; k <= n; ++k) {
      const Eigen::MatrixXcd x = pi_tilde_dense(jucys_murphy(n, k), d);
      for (const auto& b : basis) {
        jm = std::max(jm, (x * b.vector.amplitudes() - content(b.tableau, k) * b.vector.amplitudes()).norm());
      }
    }
    if (n <= 5) {
      const int k = std::min(n, 3);
      const int terms = static_cast<int>(std::min<std::uint64_t>(4, count_k_local(n, k)));
      const auto f = random_hermitian_k_local(n, k, terms, rng());
      const Eigen::MatrixXcd h = v.adjoint() * pi_tilde_dense(f, d) * v;
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (basis[a].lambda != basis[b].lambda || basis[a].weight_index != basis[b].weight_index) {
            block = std::max(block, std::abs(h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
          }
        }
      }
    }
  }
  tolerance(out, "gram_identity", gram, 1e-9);
  tolerance(out, "jucys_murphy_residual", jm, 1e-9);
  tolerance(out, "block_diagonal", block, 1e-10);
  add(out, "block_counts", counts, "dim S^lambda * dim W_lambda vectors per lambda");
  return out;
}

struct Instance {
  int n;
  int k;
  double t;
  AlgebraElement f;
};

Instance suite_instance(int i) {
  const int n = 4 + i % 3;
  const int k = 2 + (i / 3) % 2;
  const double t = (i / 6) % 2 ? 1.0 : 0.5;
  const int terms = static_cast<int>(std::min<std::uint64_t>(3 + i % 4, count_k_local(n, k)));
  return {n, k, t, random_hermitian_k_local(n, k, terms, 1000 + static_cast<std::uint64_t>(i))};
}

Checks lcu_suite(std::uint64_t) {
  Checks out;
  double worst_ratio = 0.0;  // |err| / eps
  double cross = 0.0;
  bool gates = true;
  std::map<int, std::vector<YoungBasisVector>> bases;
  for (int i = 0; i < 20; ++i) {
    const auto inst = suite_instance(i);
    auto& basis = bases[inst.n];
    if (basis.empty()) basis = young_basis(inst.n, 2);
    const Partition hook({inst.n - 1, 1});
    const int dim = static_cast<int>(hook_length_dimension(hook));
    const auto& u = basis[find_basis_vector(basis, hook, 0, i % 3)];
    const auto& v = basis[find_basis_vector(basis, hook, i % dim, i % 3)];
    const auto& w = basis[find_basis_vector(basis, Partition({inst.n - 2, 2}), 0, 0)];
    const cplx oracle = exact_matrix_element(u, v, inst.f, inst.t);
    for (double eps : {1e-2, 1e-3, 1e-6}) {
      const auto r = matrix_element(u.vector, v.vector, inst.f, inst.t, eps);
      worst_ratio = std::max(worst_ratio, std::abs(r.value - oracle) / eps);
      gates = gates && r.gates.actual <= r.gates.k2MK_bound;
      const auto rc = matrix_element(u.vector, w.vector, inst.f, inst.t, eps);
      cross = std::max(cross, std::abs(rc.value) / eps);
    }
  }
  add(out, "end_to_end_within_eps", worst_ratio <= 1.0, "max |lcu - oracle| / eps = " + sci(worst_ratio));
  add(out, "cross_block_within_eps", cross <= 1.0, "max |result| / eps = " + sci(cross));
  add(out, "swaps_within_k2MK", gates, "every run");

  // Doubling t with enough segments that ceil() rounding is small.
  double lo = 1e9;
  double hi = 0.0;
  for (int i = 0; i < 6; ++i) {
    const auto inst = suite_instance(i);
    const double t1 = 10.0 * 0.6931471805599453 / std::max(inst.f.one_norm(), 1e-12);
    const auto p1 = plan(inst.f, t1, 1e-3);
    const auto p2 = plan(inst.f, 2 * t1, 1e-3);
    const auto g1 = gate_count_report(p1, build_segment(inst.f, p1.delta_t, p1.K), inst.f);
    const auto g2 = gate_count_report(p2, build_segment(inst.f, p2.delta_t, p2.K), inst.f);
    const double ratio = static_cast<double>(g2.actual) / static_cast<double>(g1.actual);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  add(out, "doubling_t_doubles_swaps", lo >= 1.8 && hi <= 2.2, "ratios in [" + sci(lo) + ", " + sci(hi) + "]");

  double recon = 0.0;
  double trunc = 0.0;
  for (int i = 0; i < 6; ++i) {
    const auto inst = suite_instance(i);
    const auto p = plan(inst.f, inst.t, 1e-3);
    const auto seg = build_segment(inst.f, p.delta_t, p.K);
    const Eigen::MatrixXcd taylor = taylor_segment_operator(inst.f, 2, p.delta_t, p.K);
    recon = std::max(recon, (segment_operator(seg, 2) - taylor).cwiseAbs().maxCoeff());
    const ExactEvolution evo(inst.f, 2);
    const double x = p.delta_t * inst.f.one_norm();
    double bound = 1.0;
    for (int m = 1; m <= p.K + 1; ++m) bound *= x / m;
    const Eigen::MatrixXcd diff = evo.propagator(p.delta_t) - taylor;
    bound *= std::exp(x);
    const double err = Eigen::JacobiSVD<Eigen::MatrixXcd>(diff).singularValues()(0);
    trunc = std::max(trunc, err / bound);
  }
  tolerance(out, "segment_reconstruction", recon, 1e-10);
  add(out, "truncation_bound", trunc <= 1.0, "max measured / bound = " + sci(trunc));
  return out;
}

Checks pauli_suite(std::uint64_t) {
  Checks out;
  double recon = 0.0;
  for (const auto& p : enumerate_all(5)) {
    recon = std::max(recon, (pauli_dense(PauliSum::from_exact(permutation_to_pauli(p))) - permutation_matrix(p, 2)).cwiseAbs().maxCoeff());
  }
  add(out, "permutation_reconstruction_S5", recon == 0.0, "max error " + sci(recon));

  bool bound = true;
  bool equality = true;
  for (const auto& p : enumerate_all(6)) {
    const int l = locality(p);
    const double norm = permutation_to_pauli(p).one_norm();
    const double cap = l == 0 ? 1.0 : std::ldexp(1.0, l - 1);
    bound = bound && norm <= cap + 1e-12;
    const auto cycles = cycle_decomposition(p);
    const bool disjoint_pairs = l > 0 && std::all_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 2; });
    // Disjoint transpositions: (4 terms of 1/2)^c -> 2^c, equal to 2^{l-1} only when c = 1.
    if (disjoint_pairs && cycles.size() == 1) equality = equality && norm == cap;
  }
  add(out, "one_norm_bound_S6", bound, "||pauli||_1 <= 2^(locality-1)");
  add(out, "one_norm_equality_transpositions", equality, "single transpositions reach 2");

  bool binom = true;
  for (int k = 1; k <= 16; ++k) binom = binom && binomial_identity_check(k);
  add(out, "binomial_identity", binom, "k <= 16, exact rationals");

  double phases = 0.0;
  const PauliLetter letters[] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  for (auto a : letters) {
    for (auto b : letters) {
      const auto pa = PauliString::single(1, 1, a);
      const auto pb = PauliString::single(1, 1, b);
      const auto prod = multiply(pa, pb);
      const cplx ip[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      phases = std::max(phases, (pauli_matrix(a) * pauli_matrix(b) - ip[prod.power] * pauli_dense(prod.string)).cwiseAbs().maxCoeff());
    }
  }
  tolerance(out, "product_phases", phases, 0.0);

  double crossp = 0.0;
  std::map<int, std::vector<YoungBasisVector>> bases;
  for (int i = 0; i < 20; i += 2) {
    const auto inst = suite_instance(i);
    auto& basis = bases[inst.n];
    if (basis.empty()) basis = young_basis(inst.n, 2);
    const Partition hook({inst.n - 1, 1});
    const auto& u = basis[find_basis_vector(basis, hook, 0, 0)];
    const auto& v = basis[find_basis_vector(basis, hook, 1, 0)];
    for (double eps : {1e-2, 1e-3}) {
      const auto a = matrix_element(u.vector, v.vector, inst.f, inst.t, eps);
      const auto b = matrix_element_pauli(u.vector, v.vector, inst.f, inst.t, eps);
      crossp = std::max(crossp, std::abs(a.value - b.value) / (2 * eps));
    }
  }
  add(out, "cross_path_within_2eps", crossp <= 1.0, "max |swap - pauli| / 2eps = " + sci(crossp));
  return out;
}

using Suite = std::function<Checks(std::uint64_t)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"schur-weyl", schur_weyl_suite}, {"permutation", permutation_suite}, {"yor", yor_suite},
      {"fourier", fourier_suite},       {"young-basis", young_basis_suite}, {"lcu-e2e", lcu_suite},
      {"pauli", pauli_suite}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  Checks out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    for (auto& r : fn(seed)) {
      r.name = name + "/" + r.name;
      out.push_back(std::move(r));
    }
  }
  if (!found) throw DomainError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace pqc::cli
