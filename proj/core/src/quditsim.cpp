#include "pqc/quditsim.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace pqc {

std::size_t qudit_dimension(int d, int n, const ResourceCaps& caps) {
  if (d < 1 || n < 1) throw DomainError("qudit register needs d >= 1 and n >= 1");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > caps.dense) {
      throw ResourceError(std::to_string(d) + "^" + std::to_string(n) + " exceeds the dense cap " +
                          std::to_string(caps.dense));
    }
  }
  return dim;
}

Statevector::Statevector(int d, int n, const ResourceCaps& caps)
    : d_(d), n_(n), amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(qudit_dimension(d, n, caps)))) {}

Statevector::Statevector(int d, int n, Eigen::VectorXcd amplitudes) : d_(d), n_(n), amps_(std::move(amplitudes)) {
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
  if (static_cast<std::size_t>(amps_.size()) != dim) throw SizeMismatch("amplitude vector length is not d^n");
}

Statevector Statevector::basis_state(int d, int n, std::size_t index) {
  Statevector s(d, n);
  if (index >= s.dimension()) throw DomainError("basis index out of range");
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

Statevector Statevector::from_digits(int d, const std::vector<int>& digits) {
  std::size_t index = 0;
  for (int v : digits) {
    if (v < 0 || v >= d) throw DomainError("qudit letter out of range");
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  }
  return basis_state(d, static_cast<int>(digits.size()), index);
}

cplx Statevector::inner(const Statevector& other) const {
  if (other.d_ != d_ || other.n_ != n_) throw SizeMismatch("inner product of differently shaped states");
  return amps_.dot(other.amps_);  // conjugates the left operand
}

int qudit_digit(std::size_t x, int q, int d, int n) {
  for (int i = n; i > q; --i) x /= static_cast<std::size_t>(d);
  return static_cast<int>(x % static_cast<std::size_t>(d));
}

std::vector<std::uint32_t> qudit_permutation_gather(const Permutation& sigma, int d, const ResourceCaps& caps) {
  const int n = sigma.size();
  const std::size_t dim = qudit_dimension(d, n, caps);
  // place[q] = d^(n-q), the weight of qudit q in the index.
  std::vector<std::size_t> place(n + 1);
  place[n] = 1;
  for (int q = n - 1; q >= 1; --q) place[q] = place[q + 1] * static_cast<std::size_t>(d);
  std::vector<std::uint32_t> src(dim);
  std::vector<int> digits(n + 1);
  for (std::size_t y = 0; y < dim; ++y) {
    std::size_t rest = y;
    for (int q = n; q >= 1; --q) {
      digits[q] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    // Output qudit sigma(q) carries the input letter of qudit q.
    std::size_t x = 0;
    for (int q = 1; q <= n; ++q) x += static_cast<std::size_t>(digits[sigma(q)]) * place[q];
    src[y] = static_cast<std::uint32_t>(x);
  }
  return src;
}

Statevector apply_permutation(const Statevector& s, const Permutation& sigma) {
  if (sigma.size() != s.qudits()) throw SizeMismatch("permutation degree differs from qudit count");
  const auto src = qudit_permutation_gather(sigma, s.local_dimension());
  Eigen::VectorXcd out(s.amplitudes().size());
  for (std::size_t y = 0; y < src.size(); ++y) out(static_cast<Eigen::Index>(y)) = s.amplitudes()(src[y]);
  return Statevector(s.local_dimension(), s.qudits(), std::move(out));
}

void apply_adjacent_swap(Statevector& s, int k) {
  const int n = s.qudits();
  const int d = s.local_dimension();
  if (k < 1 || k >= n) throw DomainError("adjacent SWAP position out of range");
  std::size_t low = 1;  // weight of qudit k+1
  for (int q = n; q > k + 1; --q) low *= static_cast<std::size_t>(d);
  const std::size_t high = low * static_cast<std::size_t>(d);  // weight of qudit k
  auto& a = s.amplitudes();
  for (std::size_t x = 0; x < s.dimension(); ++x) {
    const std::size_t dk = (x / high) % static_cast<std::size_t>(d);
    const std::size_t dk1 = (x / low) % static_cast<std::size_t>(d);
    if (dk < dk1) {
      const std::size_t y = x - dk * high - dk1 * low + dk1 * high + dk * low;
      std::swap(a(static_cast<Eigen::Index>(x)), a(static_cast<Eigen::Index>(y)));
    }
  }
}

std::vector<int> swap_network(const Permutation& sigma) {
  // sigma = s_{k1} ... s_{km}; gates act right to left, so run the word reversed.
  auto word = adjacent_word(sigma);
  std::reverse(word.begin(), word.end());
  return word;
}

Statevector replay_swap_network(const Statevector& s, const std::vector<int>& swaps) {
  Statevector out = s;
  for (int k : swaps) apply_adjacent_swap(out, k);
  return out;
}

Statevector apply_local_unitary_everywhere(const Statevector& s, const Eigen::MatrixXcd& u) {
  const int d = s.local_dimension();
  const int n = s.qudits();
  if (u.rows() != d || u.cols() != d) throw SizeMismatch("local unitary must be d x d");
  if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("local operator is not unitary");
  }
  Eigen::VectorXcd cur = s.amplitudes();
  std::size_t low = 1;
  for (int q = n; q >= 1; --q) {
    // Apply u on qudit q, whose digit has weight `low`.
    const std::size_t high = low * static_cast<std::size_t>(d);
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(cur.size());
    for (std::size_t x = 0; x < s.dimension(); ++x) {
      const auto digit = static_cast<Eigen::Index>((x / low) % static_cast<std::size_t>(d));
      const std::size_t base = x - static_cast<std::size_t>(digit) * low;
      for (Eigen::Index a = 0; a < d; ++a) {
        next(static_cast<Eigen::Index>(base + static_cast<std::size_t>(a) * low)) +=
            u(a, digit) * cur(static_cast<Eigen::Index>(x));
      }
    }
    cur = std::move(next);
    low = high;
  }
  return Statevector(d, n, std::move(cur));
}

Statevector apply_algebra_element(const Statevector& s, const AlgebraElement& f) {
  if (f.degree() != s.qudits()) throw SizeMismatch("element degree differs from qudit count");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());
  for (const auto& [p, c] : f.terms()) {
    const auto src = qudit_permutation_gather(p, s.local_dimension());
    for (std::size_t y = 0; y < src.size(); ++y) out(static_cast<Eigen::Index>(y)) += c * s.amplitudes()(src[y]);
  }
  return Statevector(s.local_dimension(), s.qudits(), std::move(out));
}

AlgebraElement jucys_murphy(int n, int k) {
  if (k < 1 || k > n) throw DomainError("Jucys-Murphy index out of range");
  AlgebraElement x(n);
  for (int i = 1; i < k; ++i) x.add(Permutation::transposition(n, i, k), 1.0);
  return x;
}

ExactEvolution::ExactEvolution(const AlgebraElement& f, int d, const ResourceCaps& caps) {
  if (!f.is_hermitian()) throw DomainError("exact evolution needs a Hermitian element (c(s^-1) = conj c(s))");
  decompose(pi_tilde_dense(f, d, caps));
}

ExactEvolution::ExactEvolution(const Eigen::MatrixXcd& hermitian) {
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("exact evolution needs a Hermitian matrix");
  }
  decompose(hermitian);
}

void ExactEvolution::decompose(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw DomainError("Hermitian eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  residual_ = (h * eigenvectors_ - eigenvectors_ * eigenvalues_.asDiagonal()).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd ExactEvolution::propagator(double t) const {
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, -t * eigenvalues_(i));
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Eigen::VectorXcd ExactEvolution::evolve(const Eigen::VectorXcd& v, double t) const {
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * v;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) *= std::polar(1.0, -t * eigenvalues_(i));
  return eigenvectors_ * coeffs;
}

cplx ExactEvolution::matrix_element(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double t) const {
  return u.dot(evolve(v, t));
}

}  // namespace pqc
