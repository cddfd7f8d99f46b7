#include <doctest.h>

#include <map>

#include "../oracles.hpp"
#include "pqc/young_basis.hpp"
#include "pqc/yor.hpp"

using namespace pqc;

namespace {

Eigen::MatrixXcd columns(const std::vector<YoungBasisVector>& basis) {
  Eigen::MatrixXcd v(static_cast<Eigen::Index>(basis.front().vector.dimension()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = basis[i].vector.amplitudes();
  return v;
}

}  // namespace

TEST_SUITE("young_basis") {

TEST_CASE("orthonormal, complete and correctly labelled") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {3, 2}, {5, 2}, {3, 3}, {4, 3}, {3, 4}}) {
    CAPTURE(n);
    CAPTURE(d);
    const auto basis = young_basis(n, d);
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
    REQUIRE(basis.size() == dim);
    const auto v = columns(basis);
    CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff() < 1e-12);
    std::map<std::vector<int>, std::uint64_t> per;
    for (const auto& b : basis) ++per[b.lambda.parts()];
    for (const auto& [rows, count] : per) CHECK(count == oracle::hook_dim(rows) * oracle::ssyt_count(rows, d));
  }
}

TEST_CASE("Jucys-Murphy eigenvalues are contents") {
  const int n = 5, d = 2;
  const auto basis = young_basis(n, d);
  for (int k = 2; k <= n; ++k) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(32, 32);
    for (int i = 1; i < k; ++i) x += oracle::perm_matrix(oracle::images(Permutation::transposition(n, i, k)), d);
    for (const auto& b : basis) {
      CHECK((x * b.vector.amplitudes() - content(b.tableau, k) * b.vector.amplitudes()).norm() < 1e-12);
    }
  }
}

TEST_CASE("S_n acts on tableau labels through rho_lambda") {
  const int n = 4, d = 3;
  const auto basis = young_basis(n, d);
  const auto v = columns(basis);
  for (const auto& sigma : {parse_permutation("(1 2)", n), parse_permutation("(1 3 4)", n), parse_permutation("(1 4)(2 3)", n)}) {
    const Eigen::MatrixXcd m = v.adjoint() * oracle::perm_matrix(oracle::images(sigma), d) * v;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto& x = basis[a];
        const auto& y = basis[b];
        cplx expect = 0.0;
        if (x.lambda == y.lambda && x.weight_index == y.weight_index) expect = yor(x.lambda, sigma)(x.tableau_index, y.tableau_index);
        REQUIRE(std::abs(m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("lookup, exact elements and errors") {
  const auto basis = young_basis(3, 2);
  const int i = find_basis_vector(basis, Partition({2, 1}), 1, 0);
  REQUIRE(i >= 0);
  CHECK(find_basis_vector(basis, Partition({1, 1, 1}), 0, 0) == -1);
  const auto f = random_hermitian_k_local(3, 2, 2, 5);
  CHECK(std::abs(exact_matrix_element(basis[i], basis[i], f, 0.0) - 1.0) < 1e-14);
  CHECK_THROWS_AS(young_basis(3, 1), DomainError);
  ResourceCaps small;
  small.amplitudes = 1000;
  CHECK_THROWS_AS(young_basis(5, 2, small), ResourceError);
}

}
