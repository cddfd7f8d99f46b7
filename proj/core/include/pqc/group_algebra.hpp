#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "pqc/error.hpp"
#include "pqc/permutation.hpp"

namespace pqc {

using cplx = std::complex<double>;

/// Sparse element of the group algebra C[S_n]: f = sum_i c_i sigma_i.
/// Explicit zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1);

  static AlgebraElement delta(const Permutation& p, cplx coeff = 1.0);
  static AlgebraElement identity(int n) { return delta(Permutation::identity(n)); }
  /// Bulk construction; zero coefficients are dropped.
  static AlgebraElement from_terms(int n, std::map<Permutation, cplx> terms);

  int degree() const { return n_; }
  const std::map<Permutation, cplx>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  cplx coefficient(const Permutation& p) const;

  /// Adds coeff to the coefficient of p, dropping the term if it cancels.
  void add(const Permutation& p, cplx coeff);

  /// sum |c_i|
  double one_norm() const { return one_norm_; }
  /// max |c_i|
  double max_coeff() const { return max_coeff_; }
  /// Largest number of moved points over the support.
  int locality() const { return locality_; }
  /// Largest span_locality over the support.
  int span_locality() const;

  /// c(sigma^{-1}) == conj(c(sigma)) for every sigma, within tol.
  bool is_hermitian(double tol = 1e-12) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator*=(cplx scale);

 private:
  void refresh();

  int n_;
  std::map<Permutation, cplx> terms_;
  double one_norm_ = 0.0;
  double max_coeff_ = 0.0;
  int locality_ = 0;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(cplx scale, AlgebraElement a);

/// (f * g)(sigma) = sum_tau f(tau) g(tau^{-1} sigma); with counting measure,
/// delta_a * delta_b = delta_{ab}.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

/// (L_eta f)(sigma) = f(eta^{-1} sigma), i.e. L_eta delta_sigma = delta_{eta sigma}.
AlgebraElement left_translate(const Permutation& eta, const AlgebraElement& f);

/// Random element whose support consists of num_terms permutations moving
/// at most k points, closed under inversion with conjugate coefficients.
/// Coefficient moduli lie in (0, 1]. Deterministic in seed. Throws
/// DomainError when num_terms exceeds count_k_local(n, k) or k < 2 or k > n.
AlgebraElement random_hermitian_k_local(int n, int k, int num_terms, std::uint64_t seed);

/// Dense d^n x d^n matrix of pi(sigma), the qudit-permuting representation.
Eigen::MatrixXcd permutation_matrix(const Permutation& sigma, int d, const ResourceCaps& caps = default_caps());

/// pi~(f) = sum_i c_i pi(sigma_i) as a dense d^n x d^n matrix.
Eigen::MatrixXcd pi_tilde_dense(const AlgebraElement& f, int d, const ResourceCaps& caps = default_caps());

/// Dense table of f over S_n in coset order (see coset_rank).
Eigen::VectorXcd to_dense(const AlgebraElement& f, const ResourceCaps& caps = default_caps());
AlgebraElement from_dense(int n, const Eigen::VectorXcd& values, double drop_below = 0.0);

}  // namespace pqc
