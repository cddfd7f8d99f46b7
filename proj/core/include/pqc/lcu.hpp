#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "pqc/error.hpp"
#include "pqc/group_algebra.hpp"
#include "pqc/quditsim.hpp"

namespace pqc {

/// Truncated-Taylor simulation parameters for exp(-i t H).
struct SimulationPlan {
  double t = 0.0;
  double epsilon = 0.0;
  double one_norm = 0.0;       // ||c||_1 of the expansion being simulated
  double max_coeff = 0.0;      // C
  int locality = 0;            // k, moved points
  int n = 0;
  std::uint64_t M = 1;         // segments, ceil(t ||c||_1 / ln 2)
  double delta_t = 0.0;        // t / M
  double segment_epsilon = 0;  // epsilon / M
  int K = 1;                   // smallest K >= 1 with x^K / K! <= segment_epsilon / 4, x = delta_t ||c||_1
  double s = 2.0;              // segment 1-norm after padding
  int K_closed_form = 1;       // ceil(log(1/e) / log log(1/e)), e = segment_epsilon
  double M_scaling = 0.0;      // t C k n^k
  std::uint64_t term_count = 0;            // upper estimate of LCU terms per segment
  std::uint64_t predicted_swap_gates = 0;  // 3 M K max_i inv(sigma_i)
  double closed_form_estimate = 0.0;       // t C k^3 n^k L / log L, L = log(t C k n^k / epsilon)
};

/// Plan for a Hermitian f. Throws DomainError unless t > 0, 0 < epsilon < 1
/// and f is Hermitian.
SimulationPlan plan(const AlgebraElement& f, double t, double epsilon);

/// Segment and order choice shared by every expansion with 1-norm one_norm.
SimulationPlan plan_for_norm(double one_norm, double t, double epsilon);

/// sum_{m<=K} (-i dt H)^m / m! for a dense H.
Eigen::MatrixXcd taylor_operator(const Eigen::MatrixXcd& h, double dt, int K);
Eigen::MatrixXcd taylor_segment_operator(const AlgebraElement& f, int d, double dt, int K,
                                         const ResourceCaps& caps = default_caps());

/// One unitary of the segment: phase * pi(element). `word` lists factors from
/// support(f) whose product is element (length <= K).
struct LcuTerm {
  double beta = 0.0;
  cplx phase = 1.0;
  Permutation element;
  std::vector<Permutation> word;
};

/// sum_j beta_j U_j equal to the order-K Taylor polynomial of exp(-i dt f).
/// Terms are merged by group element. Two identity terms with opposite
/// phases pad the 1-norm to exactly 2 without changing the operator.
struct LcuSegment {
  int n = 0;
  double delta_t = 0.0;
  int K = 0;
  std::vector<LcuTerm> terms;
  double taylor_norm = 0.0;  // sum of beta before padding
  double s = 0.0;            // sum of beta after padding

  /// Ancilla register size: term count rounded up to a power of 2.
  std::size_t ancilla_dimension() const;
};

/// Throws ResourceError when n! exceeds caps.factorial.
LcuSegment build_segment(const AlgebraElement& f, double dt, int K, const ResourceCaps& caps = default_caps());
/// sum_j beta_j phase_j pi(element_j) as a dense matrix.
Eigen::MatrixXcd segment_operator(const LcuSegment& seg, int d, const ResourceCaps& caps = default_caps());

/// PREPARE, SELECT, PREPARE^dagger with one round of oblivious amplitude
/// amplification, simulated with an explicit ancilla register; returns the
/// system state after projecting the ancilla onto |0>.
Statevector run_segment(const Statevector& state, const LcuSegment& seg, const ResourceCaps& caps = default_caps());

/// SWAP accounting on a 1-D line. Each SELECT branch runs the swap network of
/// its group element; a segment calls SELECT three times.
struct GateReport {
  std::uint64_t actual = 0;        // M * 3 * max_j inv(element_j)
  std::uint64_t per_segment = 0;
  std::uint64_t M = 0;
  int K = 0;
  int k = 0;                       // span locality of f
  std::uint64_t k2MK_bound = 0;
  double closed_form_estimate = 0.0;
};
GateReport gate_count_report(const SimulationPlan& plan, const LcuSegment& seg, const AlgebraElement& f);

struct LcuResult {
  cplx value;
  SimulationPlan plan;
  GateReport gates;
  std::size_t segment_terms = 0;
};

/// <u| exp(-i t pi~(f)) |v> through M LCU segments. t = 0 returns <u|v>
/// with an empty report.
LcuResult matrix_element(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                         double epsilon, const ResourceCaps& caps = default_caps());

namespace detail {

/// Applies U_j (or its adjoint) to one system register: out = U_j in.
using SelectFn = std::function<void(std::size_t j, bool adjoint, const cplx* in, cplx* out)>;

/// Generic oblivious-amplification segment over sum_j beta_j U_j with
/// sum beta_j = 2.
Eigen::VectorXcd amplified_segment(const std::vector<double>& beta, const SelectFn& select,
                                   const Eigen::VectorXcd& state, const ResourceCaps& caps);

std::size_t ancilla_dimension(std::size_t terms);

}  // namespace detail

}  // namespace pqc
