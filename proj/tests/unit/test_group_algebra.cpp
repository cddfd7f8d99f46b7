#include <doctest.h>

#include <map>

#include "../oracles.hpp"
#include "pqc/group_algebra.hpp"

using namespace pqc;

TEST_SUITE("group_algebra") {

TEST_CASE("convolution against the double sum") {
  const auto f = random_hermitian_k_local(4, 3, 5, 1);
  const auto g = random_hermitian_k_local(4, 2, 4, 2);
  std::map<std::vector<int>, cplx> expect;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) expect[oracle::compose(oracle::images(a), oracle::images(b))] += x * y;
  const auto h = convolve(f, g);
  for (const auto& [im, c] : expect) {
    CHECK(std::abs(h.coefficient(Permutation::from_images(im)) - c) < 1e-14);
  }
}

TEST_CASE("random Hermitian elements") {
  const auto f = random_hermitian_k_local(5, 3, 6, 42);
  CHECK(f.is_hermitian());
  CHECK(f.locality() <= 3);
  CHECK(f.max_coeff() <= 1.0);
  const auto again = random_hermitian_k_local(5, 3, 6, 42);
  CHECK(f.terms() == again.terms());
  for (const auto& [p, c] : f.terms()) CHECK(std::abs(f.coefficient(p.inverse()) - std::conj(c)) < 1e-15);
  CHECK_THROWS_AS(random_hermitian_k_local(3, 2, 10, 1), DomainError);
  CHECK_THROWS_AS(random_hermitian_k_local(3, 1, 1, 1), DomainError);
}

TEST_CASE("dense representation") {
  const auto f = random_hermitian_k_local(4, 2, 3, 9);
  CHECK((pi_tilde_dense(f, 2) - oracle::hamiltonian(f, 2)).cwiseAbs().maxCoeff() < 1e-15);
  const auto s = parse_permutation("(1 3 4)", 4);
  CHECK((permutation_matrix(s, 3) - oracle::perm_matrix(oracle::images(s), 3)).cwiseAbs().maxCoeff() == 0.0);
  const auto table = to_dense(f);
  CHECK(table.size() == 24);
  CHECK(from_dense(4, table).terms() == f.terms());
  ResourceCaps small;
  small.dense = 8;
  CHECK_THROWS_AS(pi_tilde_dense(f, 2, small), ResourceError);
}

TEST_CASE("norms and translation") {
  std::map<Permutation, cplx> t;
  t[parse_permutation("(1 2)", 3)] = cplx(0.0, -2.0);
  t[parse_permutation("(2 3)", 3)] = 1.0;
  const auto f = AlgebraElement::from_terms(3, t);
  CHECK(f.one_norm() == 3.0);
  CHECK(f.max_coeff() == 2.0);
  CHECK_FALSE(f.is_hermitian());
  const auto eta = parse_permutation("(1 2 3)", 3);
  const auto g = left_translate(eta, f);
  CHECK(g.coefficient(eta * parse_permutation("(1 2)", 3)) == cplx(0.0, -2.0));
}

}
