#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pqc/error.hpp"
#include "pqc/group_algebra.hpp"
#include "pqc/permutation.hpp"

namespace pqc {

/// d^n, or ResourceError when above caps.dense.
std::size_t qudit_dimension(int d, int n, const ResourceCaps& caps = default_caps());

/// Amplitudes of n qudits of local dimension d. Basis index is the base-d
/// digit string with qudit 1 as the most significant digit.
class Statevector {
 public:
  Statevector(int d, int n, const ResourceCaps& caps = default_caps());
  Statevector(int d, int n, Eigen::VectorXcd amplitudes);

  static Statevector basis_state(int d, int n, std::size_t index);
  /// Digits are letters 0..d-1, one per qudit, qudit 1 first.
  static Statevector from_digits(int d, const std::vector<int>& digits);

  int local_dimension() const { return d_; }
  int qudits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  cplx inner(const Statevector& other) const;  // <this|other>

 private:
  int d_;
  int n_;
  Eigen::VectorXcd amps_;
};

/// Digit of qudit q (1-based) in basis index x.
int qudit_digit(std::size_t x, int q, int d, int n);

/// Gather table for pi(sigma): (pi(sigma) psi)[y] = psi[src[y]]. With
/// pi(sigma) e_{i_1} x ... x e_{i_n} = e_{i_{sigma^-1(1)}} x ... x e_{i_{sigma^-1(n)}}
/// the letter on qudit q moves to qudit sigma(q).
std::vector<std::uint32_t> qudit_permutation_gather(const Permutation& sigma, int d,
                                                    const ResourceCaps& caps = default_caps());

Statevector apply_permutation(const Statevector& s, const Permutation& sigma);

/// SWAP of neighbouring qudits k and k+1 (1-based), in place.
void apply_adjacent_swap(Statevector& s, int k);

/// Adjacent SWAP positions on a 1-D line of qudits; executing them in order
/// reproduces apply_permutation(., sigma). Length is inversion_count(sigma),
/// the minimum for nearest-neighbour SWAPs.
std::vector<int> swap_network(const Permutation& sigma);

/// Runs a SWAP network on a copy of s.
Statevector replay_swap_network(const Statevector& s, const std::vector<int>& swaps);

/// U applied to every qudit (U^{(x) n}). Throws DomainError unless U is a
/// d x d unitary to 1e-12.
Statevector apply_local_unitary_everywhere(const Statevector& s, const Eigen::MatrixXcd& u);

/// pi~(f) applied to s without forming the dense operator.
Statevector apply_algebra_element(const Statevector& s, const AlgebraElement& f);

/// Jucys-Murphy element X_k = sum_{i<k} (i k).
AlgebraElement jucys_murphy(int n, int k);

/// Spectral data of the Hermitian operator pi~(f), used for exact
/// propagation exp(-i t pi~(f)). Throws DomainError if f is not Hermitian.
class ExactEvolution {
 public:
  ExactEvolution(const AlgebraElement& f, int d, const ResourceCaps& caps = default_caps());
  explicit ExactEvolution(const Eigen::MatrixXcd& hermitian);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
  /// exp(-i t H) as a dense matrix.
  Eigen::MatrixXcd propagator(double t) const;
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& v, double t) const;
  /// <u| exp(-i t H) |v>.
  cplx matrix_element(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double t) const;
  /// max |H V - V Lambda| from the decomposition.
  double residual() const { return residual_; }

 private:
  void decompose(const Eigen::MatrixXcd& h);

  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
  double residual_ = 0.0;
};

}  // namespace pqc
