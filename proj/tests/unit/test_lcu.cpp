#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "pqc/lcu.hpp"
#include "pqc/young_basis.hpp"

using namespace pqc;

TEST_SUITE("lcu") {

TEST_CASE("plan parameters") {
  const auto f = random_hermitian_k_local(5, 3, 6, 4);
  const double t = 2.0, eps = 1e-4;
  const auto p = plan(f, t, eps);
  const double norm = f.one_norm();
  CHECK(p.M == static_cast<std::uint64_t>(std::ceil(t * norm / std::log(2.0))));
  CHECK(p.delta_t * static_cast<double>(p.M) == doctest::Approx(t));
  const double x = p.delta_t * norm;
  auto tail = [x](int k) {
    double v = 1.0;
    for (int m = 1; m <= k; ++m) v *= x / m;
    return v;
  };
  CHECK(tail(p.K) <= p.segment_epsilon / 4);
  if (p.K > 1) CHECK(tail(p.K - 1) > p.segment_epsilon / 4);
  CHECK(p.s == 2.0);
  CHECK(p.closed_form_estimate > 0.0);
  CHECK_THROWS_AS(plan(f, 0.0, eps), DomainError);
  CHECK_THROWS_AS(plan(f, 1.0, 1.5), DomainError);
  std::map<Permutation, cplx> t3;
  t3[parse_permutation("(1 2 3)", 3)] = 1.0;
  CHECK_THROWS_AS(plan(AlgebraElement::from_terms(3, t3), 1.0, eps), DomainError);
}

TEST_CASE("segment reproduces the truncated series with 1-norm 2") {
  const auto f = random_hermitian_k_local(4, 2, 4, 6);
  const auto p = plan(f, 1.0, 1e-3);
  const auto seg = build_segment(f, p.delta_t, p.K);
  double beta = 0.0;
  for (const auto& term : seg.terms) {
    beta += term.beta;
    CHECK(std::abs(std::abs(term.phase) - 1.0) < 1e-14);
    CHECK(static_cast<int>(term.word.size()) <= p.K);
  }
  CHECK(beta == doctest::Approx(2.0).epsilon(1e-14));
  const Eigen::MatrixXcd h = oracle::hamiltonian(f, 2);
  Eigen::MatrixXcd series = Eigen::MatrixXcd::Identity(16, 16);
  Eigen::MatrixXcd power = series;
  for (int m = 1; m <= p.K; ++m) {
    power = power * (cplx(0, -p.delta_t) * h) / static_cast<double>(m);
    series += power;
  }
  CHECK((segment_operator(seg, 2) - series).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(seg.ancilla_dimension() >= seg.terms.size());
}

TEST_CASE("amplified segment approximates the propagator") {
  const auto f = random_hermitian_k_local(4, 3, 5, 2);
  const auto p = plan(f, 0.5, 1e-6);
  const auto seg = build_segment(f, p.delta_t, p.K);
  Statevector psi = Statevector::basis_state(2, 4, 5);
  const Eigen::VectorXcd expect = oracle::expm(cplx(0, -p.delta_t) * oracle::hamiltonian(f, 2)) * psi.amplitudes();
  CHECK((run_segment(psi, seg).amplitudes() - expect).norm() < 1e-6 / static_cast<double>(p.M));
}

TEST_CASE("matrix elements against the matrix exponential") {
  const auto basis = young_basis(5, 2);
  const Partition hook({4, 1});
  const auto& u = basis[find_basis_vector(basis, hook, 0, 1)];
  const auto& v = basis[find_basis_vector(basis, hook, 3, 1)];
  const auto f = random_hermitian_k_local(5, 2, 5, 12);
  const Eigen::MatrixXcd prop = oracle::expm(cplx(0, -1.0) * oracle::hamiltonian(f, 2));
  const cplx expect = u.vector.amplitudes().dot(prop * v.vector.amplitudes());
  for (double eps : {1e-2, 1e-5}) {
    const auto r = matrix_element(u.vector, v.vector, f, 1.0, eps);
    CHECK(std::abs(r.value - expect) <= eps);
    CHECK(r.gates.actual <= r.gates.k2MK_bound);
    CHECK(r.gates.M == r.plan.M);
  }
  const auto zero = matrix_element(u.vector, u.vector, f, 0.0, 1e-3);
  CHECK(std::abs(zero.value - 1.0) < 1e-14);
  CHECK(zero.gates.actual == 0);
}

TEST_CASE("gate count is three SELECTs of the longest swap network per segment") {
  const auto f = random_hermitian_k_local(5, 2, 4, 21);
  const auto p = plan(f, 1.0, 1e-3);
  const auto seg = build_segment(f, p.delta_t, p.K);
  int longest = 0;
  for (const auto& term : seg.terms) longest = std::max(longest, oracle::inversions(oracle::images(term.element)));
  const auto g = gate_count_report(p, seg, f);
  CHECK(g.per_segment == 3u * static_cast<std::uint64_t>(longest));
  CHECK(g.actual == p.M * g.per_segment);
  CHECK(g.k2MK_bound == static_cast<std::uint64_t>(g.k * g.k) * p.M * static_cast<std::uint64_t>(p.K));
}

TEST_CASE("caps") {
  const auto f = random_hermitian_k_local(5, 2, 3, 1);
  ResourceCaps small;
  small.factorial = 24;
  CHECK_THROWS_AS(build_segment(f, 0.1, 3, small), ResourceError);
}

}
