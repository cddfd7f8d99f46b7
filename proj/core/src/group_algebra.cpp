#include "pqc/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pqc/quditsim.hpp"

namespace pqc {

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 1) throw DomainError("group algebra degree must be positive");
}

AlgebraElement AlgebraElement::delta(const Permutation& p, cplx coeff) {
  AlgebraElement f(p.size());
  f.add(p, coeff);
  return f;
}

AlgebraElement AlgebraElement::from_terms(int n, std::map<Permutation, cplx> terms) {
  AlgebraElement f(n);
  std::erase_if(terms, [](const auto& kv) { return kv.second == cplx{}; });
  for (const auto& [p, c] : terms) {
    if (p.size() != n) throw SizeMismatch("term of the wrong degree in from_terms");
  }
  f.terms_ = std::move(terms);
  f.refresh();
  return f;
}

cplx AlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? cplx{} : it->second;
}

void AlgebraElement::add(const Permutation& p, cplx coeff) {
  if (p.size() != n_) {
    throw SizeMismatch("permutation of degree " + std::to_string(p.size()) + " added to element of C[S_" +
                       std::to_string(n_) + "]");
  }
  if (coeff == cplx{}) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == cplx{}) terms_.erase(it);
  }
  refresh();
}

void AlgebraElement::refresh() {
  one_norm_ = 0.0;
  max_coeff_ = 0.0;
  locality_ = 0;
  for (const auto& [p, c] : terms_) {
    one_norm_ += std::abs(c);
    max_coeff_ = std::max(max_coeff_, std::abs(c));
    locality_ = std::max(locality_, pqc::locality(p));
  }
}

int AlgebraElement::span_locality() const {
  int s = 0;
  for (const auto& [p, c] : terms_) s = std::max(s, pqc::span_locality(p));
  return s;
}

bool AlgebraElement::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_) {
    if (std::abs(coefficient(p.inverse()) - std::conj(c)) > tol) return false;
  }
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.n_ != n_) throw SizeMismatch("adding elements of different group algebras");
  for (const auto& [p, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx{}) terms_.erase(it);
    }
  }
  refresh();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(cplx scale) {
  if (scale == cplx{}) {
    terms_.clear();
  } else {
    for (auto& [p, c] : terms_) c *= scale;
  }
  refresh();
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator*(cplx scale, AlgebraElement a) { return a *= scale; }

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.degree() != g.degree()) throw SizeMismatch("convolution of elements of different degree");
  std::map<Permutation, cplx> acc;
  for (const auto& [a, fa] : f.terms()) {
    for (const auto& [b, gb] : g.terms()) acc[a * b] += fa * gb;
  }
  return AlgebraElement::from_terms(f.degree(), std::move(acc));
}

AlgebraElement left_translate(const Permutation& eta, const AlgebraElement& f) {
  if (eta.size() != f.degree()) throw SizeMismatch("left translation by a permutation of the wrong degree");
  std::map<Permutation, cplx> moved;
  for (const auto& [p, c] : f.terms()) moved.emplace(eta * p, c);
  return AlgebraElement::from_terms(f.degree(), std::move(moved));
}

namespace {

double unit_uniform(std::mt19937_64& rng) {
  // Explicit mapping keeps streams identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

AlgebraElement random_hermitian_k_local(int n, int k, int num_terms, std::uint64_t seed) {
  if (k < 2 || k > n) throw DomainError("random_hermitian_k_local needs 2 <= k <= n");
  if (num_terms < 0 || static_cast<std::uint64_t>(num_terms) > count_k_local(n, k)) {
    throw DomainError("cannot draw " + std::to_string(num_terms) + " distinct permutations of locality <= " +
                      std::to_string(k) + " from S_" + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  auto pool = enumerate_k_local(n, k);
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::swap(pool[i - 1], pool[rng() % i]);
  }
  AlgebraElement f(n);
  int placed = 0;
  for (const auto& sigma : pool) {
    if (placed == num_terms) break;
    if (f.coefficient(sigma) != cplx{}) continue;
    const Permutation inv = sigma.inverse();
    const bool involution = inv == sigma;
    const int needed = involution ? 1 : 2;
    if (placed + needed > num_terms) continue;
    const double modulus = 1.0 - unit_uniform(rng);
    if (involution) {
      f.add(sigma, unit_uniform(rng) < 0.5 ? modulus : -modulus);
    } else {
      const cplx c = std::polar(modulus, 2.0 * std::numbers::pi * unit_uniform(rng));
      f.add(sigma, c);
      f.add(inv, std::conj(c));
    }
    placed += needed;
  }
  if (placed != num_terms) {
    throw DomainError("could not complete a Hermitian support of size " + std::to_string(num_terms));
  }
  return f;
}

Eigen::MatrixXcd permutation_matrix(const Permutation& sigma, int d, const ResourceCaps& caps) {
  const auto src = qudit_permutation_gather(sigma, d, caps);
  const auto dim = static_cast<Eigen::Index>(src.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) m(y, src[y]) = 1.0;
  return m;
}

Eigen::MatrixXcd pi_tilde_dense(const AlgebraElement& f, int d, const ResourceCaps& caps) {
  const std::size_t dim = qudit_dimension(d, f.degree(), caps);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : f.terms()) {
    const auto src = qudit_permutation_gather(p, d, caps);
    for (std::size_t y = 0; y < dim; ++y) m(static_cast<Eigen::Index>(y), src[y]) += c;
  }
  return m;
}

Eigen::VectorXcd to_dense(const AlgebraElement& f, const ResourceCaps& caps) {
  const std::uint64_t total = factorial(f.degree());
  if (total > caps.factorial) {
    throw ResourceError("dense table of S_" + std::to_string(f.degree()) + " exceeds factorial cap " +
                        std::to_string(caps.factorial));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
  for (const auto& [p, c] : f.terms()) v(static_cast<Eigen::Index>(coset_rank(p))) = c;
  return v;
}

AlgebraElement from_dense(int n, const Eigen::VectorXcd& values, double drop_below) {
  if (static_cast<std::uint64_t>(values.size()) != factorial(n)) {
    throw SizeMismatch("dense table length does not equal " + std::to_string(n) + "!");
  }
  std::map<Permutation, cplx> terms;
  for (Eigen::Index r = 0; r < values.size(); ++r) {
    if (std::abs(values(r)) > drop_below) terms.emplace(coset_unrank(n, static_cast<std::size_t>(r)), values(r));
  }
  return AlgebraElement::from_terms(n, std::move(terms));
}

}  // namespace pqc
