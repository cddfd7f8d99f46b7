#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "pqc/yor.hpp"

using namespace pqc;

TEST_SUITE("yor") {

TEST_CASE("generators of (2,1)") {
  const Eigen::MatrixXd s1 = yor_generator(Partition({2, 1}), 1);
  const Eigen::MatrixXd s2 = yor_generator(Partition({2, 1}), 2);
  Eigen::Matrix2d e1, e2;
  e1 << 1, 0, 0, -1;
  const double h = std::sqrt(3.0) / 2;
  e2 << -0.5, h, h, 0.5;
  CHECK((s1 - e1).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((s2 - e2).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("trivial and sign representations") {
  for (const auto& p : enumerate_all(4)) {
    CHECK(yor(Partition({4}), p)(0, 0) == 1.0);
    const double sign = oracle::inversions(oracle::images(p)) % 2 ? -1.0 : 1.0;
    CHECK(yor(Partition({1, 1, 1, 1}), p)(0, 0) == sign);
  }
}

TEST_CASE("character table of S_4") {
  // Classes e, (12), (12)(34), (123), (1234); rows 4, 31, 22, 211, 1111.
  const double table[5][5] = {{1, 1, 1, 1, 1}, {3, 1, -1, 0, -1}, {2, 0, 2, -1, 0}, {3, -1, -1, 0, 1}, {1, -1, 1, 1, -1}};
  const char* reps[] = {"()", "(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4)"};
  const auto parts = enumerate_partitions(4);
  for (int a = 0; a < 5; ++a) {
    for (int c = 0; c < 5; ++c) {
      CHECK(yor(parts[a], parse_permutation(reps[c], 4)).trace() == doctest::Approx(table[a][c]));
    }
  }
}

TEST_CASE("homomorphism and orthogonality over S_5") {
  for (const auto& l : enumerate_partitions(5)) {
    const auto& rep = cached_rep(l);
    const auto all = enumerate_all(5);
    double err = 0.0;
    for (std::size_t i = 0; i < all.size(); i += 7) {
      for (std::size_t j = 0; j < all.size(); j += 11) {
        err = std::max(err, (rep(all[i] * all[j]) - rep(all[i]) * rep(all[j])).cwiseAbs().maxCoeff());
      }
      const Eigen::MatrixXd m = rep(all[i]);
      err = std::max(err, (m * m.transpose() - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff());
    }
    CHECK(err < 1e-12);
  }
}

TEST_CASE("irreducibility: sum |chi|^2 = n!") {
  for (const auto& l : enumerate_partitions(5)) {
    double s = 0.0;
    for (const auto& p : enumerate_all(5)) s += std::pow(yor(l, p).trace(), 2);
    CHECK(s == doctest::Approx(120.0));
  }
}

TEST_CASE("sparse generator application matches the dense matrix") {
  const auto& rep = cached_rep(Partition({3, 2}));
  Eigen::MatrixXd m = Eigen::MatrixXd::Random(rep.dimension(), 3);
  const Eigen::MatrixXd expect = rep.generator(3) * m;
  rep.apply_generator_left(3, m);
  CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(yor(Partition({2, 1}), Permutation::identity(4)), SizeMismatch);
}

}
