#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pqc/group_algebra.hpp"
#include "pqc/young.hpp"

namespace pqc {

/// One Fourier block f^(lambda) = sum_sigma f(sigma) rho_lambda(sigma),
/// rows/columns in last-letter tableau order.
struct FourierBlock {
  Partition lambda;
  Eigen::MatrixXcd matrix;
};

/// Blocks for every partition of n, in enumerate_partitions(n) order.
struct FourierCoefficients {
  int n = 0;
  std::vector<FourierBlock> blocks;

  const Eigen::MatrixXcd& at(const Partition& lambda) const;
  /// Throws DomainError unless every block has size hook_length_dimension.
  void validate() const;
};

/// Multiply-add counters for comparing the transforms.
struct TransformStats {
  std::uint64_t ops = 0;
};

/// Direct sum over the support of f. Cost grows with term_count(f).
FourierCoefficients fourier_naive(const AlgebraElement& f, TransformStats* stats = nullptr,
                                  const ResourceCaps& caps = default_caps());
/// Same, for a dense table in coset order.
FourierCoefficients fourier_naive_dense(int n, const Eigen::VectorXcd& table, TransformStats* stats = nullptr,
                                        const ResourceCaps& caps = default_caps());

/// Fast transform over the chain S_1 < S_2 < ... < S_n. The table must be in
/// coset order, so each consecutive block of (n-1)! values is one left coset
/// c_j S_{n-1}; sub-transforms are lifted through the branching rule and
/// combined with rho(c_j) = rho(s_j) ... rho(s_{n-1}).
FourierCoefficients fourier_fft(int n, const Eigen::VectorXcd& table, TransformStats* stats = nullptr,
                                const ResourceCaps& caps = default_caps());

/// f(sigma) = (1/n!) sum_lambda d_lambda tr(f^(lambda) rho_lambda(sigma^{-1})),
/// returned as a dense table in coset order.
Eigen::VectorXcd fourier_inverse(const FourierCoefficients& coeffs, const ResourceCaps& caps = default_caps());

/// max over lambda of max-abs |(f*g)^(lambda) - f^(lambda) g^(lambda)|.
double convolution_theorem_check(const AlgebraElement& f, const AlgebraElement& g,
                                 const ResourceCaps& caps = default_caps());

double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b);

}  // namespace pqc
