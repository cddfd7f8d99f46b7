#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "pqc/quditsim.hpp"

using namespace pqc;

namespace {

Statevector random_state(int d, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Statevector s = Statevector::basis_state(d, n, 0);
  for (auto& a : s.amplitudes()) a = {g(rng), g(rng)};
  s.amplitudes().normalize();
  return s;
}

}  // namespace

TEST_SUITE("quditsim") {

TEST_CASE("big-endian basis labels") {
  const auto s = Statevector::from_digits(3, {2, 0, 1});
  CHECK(s.amplitudes()(2 * 9 + 0 * 3 + 1) == cplx(1.0));
  CHECK(qudit_digit(19, 1, 3, 3) == 2);
  CHECK(qudit_digit(19, 3, 3, 3) == 1);
}

TEST_CASE("permutation action against the dense oracle") {
  const auto psi = random_state(3, 4, 5);
  for (const auto& p : enumerate_all(4)) {
    const Eigen::VectorXcd expect = oracle::perm_matrix(oracle::images(p), 3) * psi.amplitudes();
    REQUIRE((apply_permutation(psi, p).amplitudes() - expect).cwiseAbs().maxCoeff() == 0.0);
    const auto net = swap_network(p);
    REQUIRE(static_cast<int>(net.size()) == oracle::inversions(oracle::images(p)));
    REQUIRE((replay_swap_network(psi, net).amplitudes() - expect).cwiseAbs().maxCoeff() == 0.0);
  }
  // letter on qudit 1 moves to qudit 2
  const auto moved = apply_permutation(Statevector::from_digits(2, {1, 0, 0}), parse_permutation("(1 2 3)", 3));
  CHECK(moved.amplitudes()(2) == cplx(1.0));
}

TEST_CASE("group algebra action and commutant") {
  const auto f = random_hermitian_k_local(4, 3, 5, 8);
  const auto psi = random_state(2, 4, 1);
  const Eigen::VectorXcd expect = oracle::hamiltonian(f, 2) * psi.amplitudes();
  CHECK((apply_algebra_element(psi, f).amplitudes() - expect).cwiseAbs().maxCoeff() < 1e-14);
  // U^{(x)n} commutes with pi(sigma)
  Eigen::Matrix2cd u;
  const double c = std::cos(0.3), s = std::sin(0.3);
  u << c, cplx(0, s), cplx(0, s), c;
  const auto sigma = parse_permutation("(1 3)(2 4)", 4);
  const auto a = apply_permutation(apply_local_unitary_everywhere(psi, u), sigma);
  const auto b = apply_local_unitary_everywhere(apply_permutation(psi, sigma), u);
  CHECK((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(apply_local_unitary_everywhere(psi, Eigen::Matrix2cd::Ones()), DomainError);
}

TEST_CASE("exact evolution matches the matrix exponential") {
  const auto f = random_hermitian_k_local(4, 2, 4, 3);
  const ExactEvolution evo(f, 2);
  const Eigen::MatrixXcd h = oracle::hamiltonian(f, 2);
  const Eigen::MatrixXcd u = oracle::expm(cplx(0, -0.7) * h);
  CHECK((evo.propagator(0.7) - u).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(evo.residual() < 1e-12);
  std::map<Permutation, cplx> t;
  t[parse_permutation("(1 2 3)", 3)] = 1.0;
  CHECK_THROWS_AS(ExactEvolution(AlgebraElement::from_terms(3, t), 2), DomainError);
}

TEST_CASE("Jucys-Murphy elements commute") {
  const auto x3 = pi_tilde_dense(jucys_murphy(4, 3), 2);
  const auto x4 = pi_tilde_dense(jucys_murphy(4, 4), 2);
  CHECK((x3 * x4 - x4 * x3).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(jucys_murphy(4, 4).term_count() == 3);
}

TEST_CASE("dense cap") {
  ResourceCaps small;
  small.dense = 100;
  CHECK_THROWS_AS(qudit_dimension(2, 7, small), ResourceError);
  CHECK(qudit_dimension(2, 6, small) == 64);
}

}
