#pragma once

#include <vector>

#include "pqc/error.hpp"
#include "pqc/group_algebra.hpp"
#include "pqc/quditsim.hpp"
#include "pqc/young.hpp"

namespace pqc {

/// One vector of the Young (Gelfand-Tsetlin) basis of (C^d)^{(x) n}.
struct YoungBasisVector {
  Partition lambda;
  StandardTableau tableau;
  int tableau_index = 0;     // position in last-letter order
  int weight_index = 0;      // SU(d) multiplicity label
  std::vector<int> weight;   // letter counts of the weight space holding the vector
  Statevector vector{1, 1};
};

/// Complete orthonormal basis labelled (lambda, tableau, weight_index),
/// ordered by partition, then tableau, then weight_index.
///
/// For each lambda the highest-weight vector is cut out of the weight-lambda
/// space by Jucys-Murphy spectral projectors onto the contents of the
/// row-reading tableau. Lowering operators F_a (letter a -> a+1) and
/// Gram-Schmidt give the multiplicity copies, weights sorted by letter counts
/// descending. Every copy is then carried to the other tableaux with the
/// Young orthogonal form of s_k, so the S_n action on the label T is exactly
/// rho_lambda from yor.
///
/// Throws ResourceError if d^n exceeds caps.dense or d^n * d^n exceeds
/// caps.amplitudes.
std::vector<YoungBasisVector> young_basis(int n, int d, const ResourceCaps& caps = default_caps());

/// Position of (lambda, tableau_index, weight_index) in a young_basis result, or -1.
int find_basis_vector(const std::vector<YoungBasisVector>& basis, const Partition& lambda, int tableau_index,
                      int weight_index);

/// <u| exp(-i t pi~(f)) |v> through the Hermitian eigendecomposition.
/// Throws DomainError if f is not Hermitian.
cplx exact_matrix_element(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                          const ResourceCaps& caps = default_caps());
inline cplx exact_matrix_element(const YoungBasisVector& u, const YoungBasisVector& v, const AlgebraElement& f,
                                 double t, const ResourceCaps& caps = default_caps()) {
  return exact_matrix_element(u.vector, v.vector, f, t, caps);
}

}  // namespace pqc
