#include <doctest.h>

#include "../oracles.hpp"
#include "pqc/pauli.hpp"
#include "pqc/young_basis.hpp"

using namespace pqc;

namespace {

Eigen::MatrixXcd kron_string(const std::vector<Eigen::Matrix2cd>& ops) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& op : ops) {
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * op;
    m = next;
  }
  return m;
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("strings: parse, print, dense form") {
  const auto p = parse_pauli_string("X1 Z3", 3);
  CHECK(to_string(p) == "X1 Z3");
  CHECK(p.weight() == 2);
  CHECK(to_string(PauliString::identity(2)) == "I");
  Eigen::Matrix2cd x, z, i2;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  i2.setIdentity();
  CHECK((pauli_dense(p) - kron_string({x, i2, z})).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(parse_pauli_string("X4", 3), DomainError);
  CHECK_THROWS_AS(parse_pauli_string("Q1", 3), DomainError);
}

TEST_CASE("products carry phases") {
  const auto x = PauliString::single(1, 1, PauliLetter::X);
  const auto y = PauliString::single(1, 1, PauliLetter::Y);
  const auto r = multiply(x, y);
  CHECK(r.power == 1);
  CHECK(r.string == PauliString::single(1, 1, PauliLetter::Z));
  CHECK(multiply(y, x).power == 3);
  const auto a = parse_pauli_string("X1 Y2", 2);
  const auto b = parse_pauli_string("Y1 Y2", 2);
  const cplx ip[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  const auto ab = multiply(a, b);
  CHECK((pauli_dense(a) * pauli_dense(b) - ip[ab.power] * pauli_dense(ab.string)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("transposition expansion is the exchange operator") {
  const auto e = transposition_to_pauli(2, 4, 4);
  CHECK(e.terms().size() == 4);
  CHECK(e.one_norm() == 2.0);
  const auto m = pauli_dense(PauliSum::from_exact(e));
  CHECK((m - oracle::perm_matrix({1, 4, 3, 2}, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(transposition_to_pauli(2, 2, 3), DomainError);
}

TEST_CASE("permutation expansions over S_4") {
  for (const auto& p : enumerate_all(4)) {
    const auto e = permutation_to_pauli(p);
    REQUIRE((pauli_dense(PauliSum::from_exact(e)) - oracle::perm_matrix(oracle::images(p), 2)).cwiseAbs().maxCoeff() == 0.0);
    const int l = oracle::moved(oracle::images(p));
    REQUIRE(e.one_norm() <= (l == 0 ? 1.0 : std::ldexp(1.0, l - 1)));
  }
}

TEST_CASE("binomial identity") {
  for (int k = 1; k <= 30; ++k) CHECK(binomial_identity_check(k));
  CHECK_THROWS_AS(binomial_identity_check(0), DomainError);
}

TEST_CASE("Heisenberg chain through the Pauli path") {
  // H = sum_i (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}) / 4 on 4 qubits.
  const int n = 4;
  PauliSum h(n);
  for (int i = 1; i < n; ++i) {
    for (const char* s : {"X", "Y", "Z"}) {
      h.add(parse_pauli_string(std::string(s) + std::to_string(i) + " " + s + std::to_string(i + 1), n), 0.25);
    }
  }
  CHECK(h.max_weight() == 2);
  const Eigen::MatrixXcd dense = pauli_dense(h);
  CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  const auto basis = young_basis(n, 2);
  const auto& u = basis[find_basis_vector(basis, Partition({3, 1}), 0, 0)];
  const auto& v = basis[find_basis_vector(basis, Partition({3, 1}), 2, 0)];
  const cplx expect = u.vector.amplitudes().dot(oracle::expm(cplx(0, -0.8) * dense) * v.vector.amplitudes());
  const auto r = matrix_element_pauli(u.vector, v.vector, h, 0.8, 1e-4);
  CHECK(std::abs(r.value - expect) <= 1e-4);
  CHECK(r.gates.single_qubit_paulis > 0);
}

TEST_CASE("Pauli and swap paths agree") {
  const auto f = random_hermitian_k_local(4, 3, 4, 17);
  const auto basis = young_basis(4, 2);
  const auto& u = basis[find_basis_vector(basis, Partition({2, 2}), 0, 0)];
  const auto& v = basis[find_basis_vector(basis, Partition({2, 2}), 1, 0)];
  const auto p = matrix_element_pauli(u.vector, v.vector, f, 1.0, 1e-3);
  const cplx expect = exact_matrix_element(u, v, f, 1.0);
  CHECK(std::abs(p.value - expect) <= 1e-3);
  CHECK(element_to_pauli(f).max_weight() <= 3);
}

}
