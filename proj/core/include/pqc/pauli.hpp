#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "pqc/error.hpp"
#include "pqc/group_algebra.hpp"
#include "pqc/lcu.hpp"
#include "pqc/quditsim.hpp"

namespace pqc {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis on n <= 64 qubits, stored as bit
/// masks (bit q-1 for qubit q): X where only x is set, Z where only z is set,
/// Y where both are.
struct PauliString {
  int n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static PauliString identity(int n) { return {n, 0, 0}; }
  static PauliString single(int n, int qubit, PauliLetter letter);

  PauliLetter letter(int qubit) const;
  int weight() const;
  bool is_identity() const { return x == 0 && z == 0; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// "X1 X2", "Z3", or "I" for the identity.
std::string to_string(const PauliString& p);
PauliString parse_pauli_string(std::string_view text, int n);

/// a b = i^power * c.
struct PauliProduct {
  int power = 0;  // 0..3
  PauliString string;
};
PauliProduct multiply(const PauliString& a, const PauliString& b);

/// 2x2 matrix of a single letter.
Eigen::Matrix2cd pauli_matrix(PauliLetter letter);

/// Dense 2^n x 2^n matrix, qubit 1 the most significant bit.
Eigen::MatrixXcd pauli_dense(const PauliString& p);

/// out = p in over 2^n amplitudes.
void apply_pauli(const PauliString& p, cplx phase, const cplx* in, cplx* out);

/// Gaussian dyadic rational (re + i im) / 2^exp, kept in lowest terms.
struct Dyadic {
  std::int64_t re = 0;
  std::int64_t im = 0;
  int exp = 0;

  static Dyadic from_int(std::int64_t v) { return {v, 0, 0}; }
  static Dyadic half() { return {1, 0, 1}; }
  bool is_zero() const { return re == 0 && im == 0; }
  cplx value() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};
Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);
/// Multiplication by i^power.
Dyadic times_i_power(const Dyadic& a, int power);

/// Pauli expansion with exact coefficients.
class ExactPauliSum {
 public:
  explicit ExactPauliSum(int n = 1) : n_(n) {}
  int qubits() const { return n_; }
  const std::map<PauliString, Dyadic>& terms() const { return terms_; }
  void add(const PauliString& p, const Dyadic& c);
  /// Sum of |c|, evaluated in floating point from the exact coefficients.
  double one_norm() const;
  friend ExactPauliSum operator*(const ExactPauliSum& a, const ExactPauliSum& b);

 private:
  int n_;
  std::map<PauliString, Dyadic> terms_;
};

/// Floating-point Pauli expansion with like terms combined.
class PauliSum {
 public:
  explicit PauliSum(int n = 1) : n_(n) {}
  static PauliSum from_exact(const ExactPauliSum& exact);

  int qubits() const { return n_; }
  const std::map<PauliString, cplx>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Adds c, dropping terms whose magnitude falls to drop_below or less.
  void add(const PauliString& p, cplx c, double drop_below = 0.0);
  double one_norm() const;
  double max_coeff() const;
  int max_weight() const;

 private:
  int n_;
  std::map<PauliString, cplx> terms_;
};

Eigen::MatrixXcd pauli_dense(const PauliSum& sum, const ResourceCaps& caps = default_caps());

/// pi((i j)) = (I + X_i X_j + Y_i Y_j + Z_i Z_j) / 2. Throws DomainError if i == j.
ExactPauliSum transposition_to_pauli(int i, int j, int n);
/// Product of transposition expansions in transposition_decomposition order.
ExactPauliSum permutation_to_pauli(const Permutation& sigma);
/// sum_i c_i permutation_to_pauli(sigma_i); terms below 1e-15 are dropped.
PauliSum element_to_pauli(const AlgebraElement& f);

/// sum_j 2^(k-1-2j) (3/4)^(k-1-j) binom(k-1, j) == 2^(k-1) in exact rationals.
/// Throws DomainError unless 1 <= k <= 30.
bool binomial_identity_check(int k);

struct PauliGateReport {
  std::uint64_t actual = 0;       // M * 3 * max_j (Hamiltonian factors in U_j)
  std::uint64_t per_segment = 0;
  std::uint64_t single_qubit_paulis = 0;  // M * 3 * max_j weight(U_j)
  std::uint64_t M = 0;
  int K = 0;
  int k = 0;
  double L = 0.0;                 // 2^(k-1) C
  double closed_form_estimate = 0.0;
};

struct PauliLcuResult {
  cplx value;
  SimulationPlan plan;
  PauliGateReport gates;
  std::size_t segment_terms = 0;
};

/// Same pipeline as matrix_element with Pauli strings as the LCU unitaries.
/// Requires d = 2 and Hermitian f.
PauliLcuResult matrix_element_pauli(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                                    double epsilon, const ResourceCaps& caps = default_caps());
/// Same, for a Hamiltonian given directly as real-coefficient Pauli strings.
/// k is the largest string weight and L the largest coefficient.
PauliLcuResult matrix_element_pauli(const Statevector& u, const Statevector& v, const PauliSum& h, double t,
                                    double epsilon, const ResourceCaps& caps = default_caps());

}  // namespace pqc
