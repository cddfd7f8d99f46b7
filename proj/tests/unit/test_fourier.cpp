#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "pqc/fourier.hpp"
#include "pqc/yor.hpp"

using namespace pqc;

namespace {

Eigen::VectorXcd random_table(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(factorial(n)));
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("naive transform against direct summation") {
  const int n = 4;
  const auto table = random_table(n, 3);
  const auto coeffs = fourier_naive_dense(n, table);
  for (const auto& l : enumerate_partitions(n)) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(hook_length_dimension(l)),
                                                  static_cast<Eigen::Index>(hook_length_dimension(l)));
    for (std::size_t r = 0; r < factorial(n); ++r) {
      sum += table(static_cast<Eigen::Index>(r)) * yor(l, coset_unrank(n, r)).cast<cplx>();
    }
    CHECK((coeffs.at(l) - sum).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fast transform agrees with naive and costs less") {
  for (int n = 1; n <= 6; ++n) {
    const auto table = random_table(n, 10 + n);
    TransformStats a, b;
    const auto fast = fourier_fft(n, table, &a);
    const auto slow = fourier_naive_dense(n, table, &b);
    CHECK(max_abs_difference(fast, slow) < 1e-11);
    if (n >= 3) CHECK(a.ops < b.ops);
  }
}

TEST_CASE("delta at the identity gives identity blocks") {
  const auto c = fourier_naive(AlgebraElement::identity(5));
  for (const auto& b : c.blocks) CHECK(b.matrix.isIdentity(0.0));
  c.validate();
}

TEST_CASE("inverse and convolution theorem") {
  const auto table = random_table(5, 77);
  CHECK((fourier_inverse(fourier_fft(5, table)) - table).cwiseAbs().maxCoeff() < 1e-12);
  const auto f = random_hermitian_k_local(5, 3, 6, 1);
  const auto g = random_hermitian_k_local(5, 2, 4, 2);
  CHECK(convolution_theorem_check(f, g) < 1e-12);
}

TEST_CASE("caps and shape errors") {
  ResourceCaps small;
  small.factorial = 24;
  CHECK_THROWS_AS(fourier_fft(5, random_table(5, 1), nullptr, small), ResourceError);
  CHECK_THROWS_AS(fourier_fft(4, Eigen::VectorXcd::Zero(23)), SizeMismatch);
  FourierCoefficients bad = fourier_naive(AlgebraElement::identity(3));
  bad.blocks[0].matrix.resize(2, 2);
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

}
