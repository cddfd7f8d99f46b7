#include "pqc/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pqc {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void check_query(double t, double epsilon) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("simulation time must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
}

double closed_form(double t, double c, int k, int n, double epsilon) {
  const double nk = std::pow(static_cast<double>(n), k);
  const double base = t * c * k * nk;
  if (base <= 0.0) return 0.0;
  const double l = std::log(base / epsilon);
  const double ll = l > 1.0 ? std::log(l) : 0.0;
  const double ratio = ll > 0.0 ? l / ll : std::max(l, 1.0);
  return t * c * k * k * k * nk * ratio;
}

}  // namespace

SimulationPlan plan_for_norm(double one_norm, double t, double epsilon) {
  check_query(t, epsilon);
  SimulationPlan p;
  p.t = t;
  p.epsilon = epsilon;
  p.one_norm = one_norm;
  p.M = static_cast<std::uint64_t>(std::max(1.0, std::ceil(t * one_norm / kLn2)));
  p.delta_t = t / static_cast<double>(p.M);
  p.segment_epsilon = epsilon / static_cast<double>(p.M);
  const double x = p.delta_t * one_norm;
  double term = 1.0;
  int K = 0;
  do {
    ++K;
    term *= x / K;
  } while (term > p.segment_epsilon / 4.0);
  p.K = K;
  const double l = std::log(1.0 / p.segment_epsilon);
  const double ll = l > 1.0 ? std::log(l) : 0.0;
  p.K_closed_form = std::max(1, static_cast<int>(std::ceil(ll > 0.0 ? l / ll : l)));
  return p;
}

SimulationPlan plan(const AlgebraElement& f, double t, double epsilon) {
  check_query(t, epsilon);
  if (!f.is_hermitian()) throw DomainError("simulation needs a Hermitian element (c(s^-1) = conj c(s))");
  SimulationPlan p = plan_for_norm(f.one_norm(), t, epsilon);
  const int n = f.degree();
  p.n = n;
  p.max_coeff = f.max_coeff();
  p.locality = f.locality();
  p.M_scaling = t * p.max_coeff * p.locality * std::pow(static_cast<double>(n), p.locality);

  const double all = n <= 20 ? static_cast<double>(factorial(n)) : 1e300;
  double terms = 0.0;
  double power = 1.0;
  for (int m = 0; m <= p.K && terms < all; ++m) {
    terms += power;
    power *= static_cast<double>(f.term_count());
  }
  p.term_count = static_cast<std::uint64_t>(std::min(terms, all)) + 2;

  int max_inv = 0;
  for (const auto& [sigma, c] : f.terms()) max_inv = std::max(max_inv, inversion_count(sigma));
  p.predicted_swap_gates = 3 * p.M * static_cast<std::uint64_t>(p.K) * static_cast<std::uint64_t>(max_inv);
  p.closed_form_estimate = closed_form(t, p.max_coeff, p.locality, n, epsilon);
  return p;
}

Eigen::MatrixXcd taylor_operator(const Eigen::MatrixXcd& h, double dt, int K) {
  if (K < 0) throw DomainError("Taylor order must be non-negative");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
  Eigen::MatrixXcd term = sum;
  for (int m = 1; m <= K; ++m) {
    term = (term * h) * cplx(0.0, -dt / m);
    sum += term;
  }
  return sum;
}

Eigen::MatrixXcd taylor_segment_operator(const AlgebraElement& f, int d, double dt, int K,
                                         const ResourceCaps& caps) {
  return taylor_operator(pi_tilde_dense(f, d, caps), dt, K);
}

std::size_t LcuSegment::ancilla_dimension() const { return detail::ancilla_dimension(terms.size()); }

LcuSegment build_segment(const AlgebraElement& f, double dt, int K, const ResourceCaps& caps) {
  const int n = f.degree();
  if (K < 0) throw DomainError("Taylor order must be non-negative");
  if (n > 20 || factorial(n) > caps.factorial) {
    throw ResourceError("merging LCU terms over S_" + std::to_string(n) + " exceeds the factorial cap " +
                        std::to_string(caps.factorial) + "; use a smaller n");
  }
  const Permutation e = Permutation::identity(n);
  std::map<Permutation, cplx> total{{e, 1.0}};
  std::map<Permutation, std::vector<Permutation>> words{{e, {}}};
  std::map<Permutation, cplx> power{{e, 1.0}};
  for (int m = 1; m <= K; ++m) {
    std::map<Permutation, cplx> next;
    const cplx scale(0.0, -dt / m);
    for (const auto& [g, a] : power) {
      for (const auto& [sigma, c] : f.terms()) {
        const Permutation h = sigma * g;
        next[h] += scale * c * a;
        if (!words.count(h)) {
          auto w = words.at(g);
          w.insert(w.begin(), sigma);
          words.emplace(h, std::move(w));
        }
      }
    }
    for (const auto& [h, a] : next) total[h] += a;
    power = std::move(next);
  }

  LcuSegment seg;
  seg.n = n;
  seg.delta_t = dt;
  seg.K = K;
  for (const auto& [g, gamma] : total) {
    const double beta = std::abs(gamma);
    if (beta == 0.0) continue;
    seg.terms.push_back({beta, gamma / beta, g, words.at(g)});
    seg.taylor_norm += beta;
  }
  const double pad = 2.0 - seg.taylor_norm;
  if (pad < -1e-12) throw DomainError("segment 1-norm exceeds 2; dt ||c||_1 must be at most ln 2");
  if (pad > 0.0) {
    seg.terms.push_back({pad / 2.0, 1.0, e, {}});
    seg.terms.push_back({pad / 2.0, -1.0, e, {}});
  }
  for (const auto& term : seg.terms) seg.s += term.beta;
  return seg;
}

Eigen::MatrixXcd segment_operator(const LcuSegment& seg, int d, const ResourceCaps& caps) {
  const auto dim = static_cast<Eigen::Index>(qudit_dimension(d, seg.n, caps));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : seg.terms) out += (term.beta * term.phase) * permutation_matrix(term.element, d, caps);
  return out;
}

namespace detail {

std::size_t ancilla_dimension(std::size_t terms) {
  std::size_t dim = 1;
  while (dim < terms) dim *= 2;
  return dim;
}

Eigen::VectorXcd amplified_segment(const std::vector<double>& beta, const SelectFn& select,
                                   const Eigen::VectorXcd& state, const ResourceCaps& caps) {
  using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const std::size_t anc = ancilla_dimension(beta.size());
  const auto dim = static_cast<std::size_t>(state.size());
  if (anc > caps.amplitudes / std::max<std::size_t>(dim, 1)) {
    throw ResourceError("ancilla register of " + std::to_string(anc) + " x " + std::to_string(dim) +
                        " amplitudes exceeds the cap " + std::to_string(caps.amplitudes) +
                        "; use a sparser element or larger epsilon");
  }
  const auto rows = static_cast<Eigen::Index>(anc);
  const auto cols = static_cast<Eigen::Index>(dim);

  // PREPARE as the Householder reflection exchanging |0> and sum_j sqrt(beta_j / 2) |j>.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rows);
  for (std::size_t j = 0; j < beta.size(); ++j) w(static_cast<Eigen::Index>(j)) = -std::sqrt(beta[j] / 2.0);
  w(0) += 1.0;
  const double wn = w.squaredNorm();

  RowMatrix psi = RowMatrix::Zero(rows, cols);
  psi.row(0) = state.transpose();
  Eigen::Matrix<cplx, 1, Eigen::Dynamic> scratch(cols);

  auto prepare = [&] {
    if (wn < 1e-30) return;
    const Eigen::Matrix<cplx, 1, Eigen::Dynamic> proj = w.transpose().cast<cplx>() * psi;
    psi -= (2.0 / wn) * w.cast<cplx>() * proj;
  };
  auto apply_w = [&](bool adjoint) {
    prepare();
    for (std::size_t j = 0; j < beta.size(); ++j) {
      const auto r = static_cast<Eigen::Index>(j);
      select(j, adjoint, psi.row(r).data(), scratch.data());
      psi.row(r) = scratch;
    }
    prepare();
  };
  auto reflect = [&] { psi.bottomRows(rows - 1) *= -1.0; };

  // -W R W^dagger R W
  apply_w(false);
  reflect();
  apply_w(true);
  reflect();
  apply_w(false);
  return -psi.row(0).transpose();
}

}  // namespace detail

Statevector run_segment(const Statevector& state, const LcuSegment& seg, const ResourceCaps& caps) {
  if (state.qudits() != seg.n) throw SizeMismatch("segment degree differs from qudit count");
  const int d = state.local_dimension();
  std::vector<std::vector<std::uint32_t>> fwd;
  std::vector<std::vector<std::uint32_t>> bwd;
  std::vector<double> beta;
  for (const auto& term : seg.terms) {
    fwd.push_back(qudit_permutation_gather(term.element, d, caps));
    bwd.push_back(qudit_permutation_gather(term.element.inverse(), d, caps));
    beta.push_back(term.beta);
  }
  const std::size_t dim = state.dimension();
  auto select = [&](std::size_t j, bool adjoint, const cplx* in, cplx* out) {
    const auto& src = adjoint ? bwd[j] : fwd[j];
    const cplx phase = adjoint ? std::conj(seg.terms[j].phase) : seg.terms[j].phase;
    for (std::size_t y = 0; y < dim; ++y) out[y] = phase * in[src[y]];
  };
  return Statevector(d, state.qudits(), detail::amplified_segment(beta, select, state.amplitudes(), caps));
}

GateReport gate_count_report(const SimulationPlan& plan, const LcuSegment& seg, const AlgebraElement& f) {
  GateReport r;
  int longest = 0;
  for (const auto& term : seg.terms) longest = std::max(longest, inversion_count(term.element));
  r.per_segment = 3 * static_cast<std::uint64_t>(longest);
  r.M = plan.M;
  r.K = plan.K;
  r.actual = r.M * r.per_segment;
  r.k = f.span_locality();
  r.k2MK_bound = static_cast<std::uint64_t>(r.k) * static_cast<std::uint64_t>(r.k) * r.M *
                 static_cast<std::uint64_t>(r.K);
  r.closed_form_estimate = plan.closed_form_estimate;
  return r;
}

LcuResult matrix_element(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                         double epsilon, const ResourceCaps& caps) {
  if (u.qudits() != f.degree() || v.qudits() != f.degree() || u.local_dimension() != v.local_dimension()) {
    throw SizeMismatch("states and element disagree on n or d");
  }
  LcuResult out;
  if (t == 0.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    out.value = u.inner(v);
    out.plan.epsilon = epsilon;
    out.plan.M = 0;
    out.plan.K = 0;
    out.gates.k = f.span_locality();
    return out;
  }
  out.plan = plan(f, t, epsilon);
  const LcuSegment seg = build_segment(f, out.plan.delta_t, out.plan.K, caps);
  out.segment_terms = seg.terms.size();
  Statevector cur = v;
  for (std::uint64_t m = 0; m < out.plan.M; ++m) cur = run_segment(cur, seg, caps);
  out.value = u.inner(cur);
  out.gates = gate_count_report(out.plan, seg, f);
  return out;
}

}  // namespace pqc
