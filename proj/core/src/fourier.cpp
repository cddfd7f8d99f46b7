#include "pqc/fourier.hpp"

#include <algorithm>
#include <map>

#include "pqc/error.hpp"
#include "pqc/yor.hpp"

namespace pqc {

const Eigen::MatrixXcd& FourierCoefficients::at(const Partition& lambda) const {
  for (const auto& b : blocks) {
    if (b.lambda == lambda) return b.matrix;
  }
  throw DomainError("no Fourier block for partition " + to_string(lambda));
}

void FourierCoefficients::validate() const {
  const auto parts = enumerate_partitions(n);
  if (parts.size() != blocks.size()) throw DomainError("Fourier coefficients must have one block per partition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto dim = static_cast<Eigen::Index>(hook_length_dimension(parts[i]));
    if (blocks[i].lambda != parts[i]) throw DomainError("Fourier blocks out of partition order");
    if (blocks[i].matrix.rows() != dim || blocks[i].matrix.cols() != dim) {
      throw DomainError("Fourier block for " + to_string(parts[i]) + " must be " + std::to_string(dim) + "x" +
                        std::to_string(dim));
    }
  }
}

double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
  if (a.n != b.n || a.blocks.size() != b.blocks.size()) throw SizeMismatch("Fourier coefficient sets differ in n");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    worst = std::max(worst, (a.blocks[i].matrix - b.blocks[i].matrix).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void check_factorial_cap(int n, const ResourceCaps& caps) {
  if (n < 1) throw DomainError("Fourier transform needs n >= 1");
  if (n > 20 || factorial(n) > caps.factorial) {
    throw ResourceError("S_" + std::to_string(n) + " exceeds the factorial cap " + std::to_string(caps.factorial));
  }
}

// rho_lambda(sigma) built from the adjacent word, counting multiply-adds.
Eigen::MatrixXd evaluate_rep(const YoungOrthogonalRep& rep, const Permutation& sigma, std::uint64_t& ops) {
  const auto word = adjacent_word(sigma);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rep.dimension(), rep.dimension());
  for (auto it = word.rbegin(); it != word.rend(); ++it) ops += rep.apply_generator_left(*it, m);
  return m;
}

template <typename Terms>
FourierCoefficients naive_impl(int n, const Terms& terms, TransformStats* stats) {
  FourierCoefficients out;
  out.n = n;
  std::uint64_t ops = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    const auto& rep = cached_rep(lambda);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rep.dimension(), rep.dimension());
    for (const auto& [sigma, c] : terms) {
      acc += c * evaluate_rep(rep, sigma, ops).template cast<cplx>();
      ops += static_cast<std::uint64_t>(rep.dimension()) * rep.dimension();
    }
    out.blocks.push_back({lambda, std::move(acc)});
  }
  if (stats) stats->ops += ops;
  return out;
}

struct FftLevel {
  std::vector<Partition> partitions;
  std::map<Partition, int> index;
};

class ChainFft {
 public:
  explicit ChainFft(int n) : levels_(n + 1) {
    for (int m = 1; m <= n; ++m) {
      levels_[m].partitions = enumerate_partitions(m);
      for (int i = 0; i < static_cast<int>(levels_[m].partitions.size()); ++i) {
        levels_[m].index.emplace(levels_[m].partitions[i], i);
      }
    }
  }

  std::vector<Eigen::MatrixXcd> run(int m, const cplx* data) {
    if (m == 1) return {Eigen::MatrixXcd::Constant(1, 1, data[0])};
    const std::size_t block = factorial(m - 1);
    std::vector<std::vector<Eigen::MatrixXcd>> sub;
    sub.reserve(m);
    for (int j = 1; j <= m; ++j) sub.push_back(run(m - 1, data + (j - 1) * block));

    const auto& level = levels_[m];
    const auto& lower = levels_[m - 1];
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(level.partitions.size());
    for (const auto& lambda : level.partitions) {
      const auto& rep = cached_rep(lambda);
      const int dim = rep.dimension();
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
      for (int j = 1; j <= m; ++j) {
        // Restriction to S_{m-1} is block diagonal over removable corners.
        Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(dim, dim);
        int offset = 0;
        for (const auto& [r, c] : lambda.removable_corners()) {
          const auto& child = sub[j - 1][lower.index.at(lambda.without_corner(r))];
          lifted.block(offset, offset, child.rows(), child.cols()) = child;
          offset += static_cast<int>(child.rows());
        }
        for (int k = m - 1; k >= j; --k) ops_ += rep.apply_generator_left(k, lifted);
        acc += lifted;
        ops_ += static_cast<std::uint64_t>(dim) * dim;
      }
      out.push_back(std::move(acc));
    }
    return out;
  }

  std::uint64_t ops() const { return ops_; }

 private:
  std::vector<FftLevel> levels_;
  std::uint64_t ops_ = 0;
};

}  // namespace

FourierCoefficients fourier_naive(const AlgebraElement& f, TransformStats* stats, const ResourceCaps& caps) {
  check_factorial_cap(f.degree(), caps);
  return naive_impl(f.degree(), f.terms(), stats);
}

FourierCoefficients fourier_naive_dense(int n, const Eigen::VectorXcd& table, TransformStats* stats,
                                        const ResourceCaps& caps) {
  check_factorial_cap(n, caps);
  if (static_cast<std::uint64_t>(table.size()) != factorial(n)) throw SizeMismatch("dense table length must be n!");
  std::vector<std::pair<Permutation, cplx>> terms;
  terms.reserve(static_cast<std::size_t>(table.size()));
  for (Eigen::Index r = 0; r < table.size(); ++r) {
    terms.emplace_back(coset_unrank(n, static_cast<std::size_t>(r)), table(r));
  }
  return naive_impl(n, terms, stats);
}

FourierCoefficients fourier_fft(int n, const Eigen::VectorXcd& table, TransformStats* stats,
                                const ResourceCaps& caps) {
  check_factorial_cap(n, caps);
  if (static_cast<std::uint64_t>(table.size()) != factorial(n)) throw SizeMismatch("dense table length must be n!");
  ChainFft fft(n);
  auto mats = fft.run(n, table.data());
  FourierCoefficients out;
  out.n = n;
  const auto parts = enumerate_partitions(n);
  for (std::size_t i = 0; i < parts.size(); ++i) out.blocks.push_back({parts[i], std::move(mats[i])});
  if (stats) stats->ops += fft.ops();
  return out;
}

Eigen::VectorXcd fourier_inverse(const FourierCoefficients& coeffs, const ResourceCaps& caps) {
  check_factorial_cap(coeffs.n, caps);
  coeffs.validate();
  const int n = coeffs.n;
  const std::uint64_t total = factorial(n);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
  std::uint64_t unused = 0;
  for (const auto& block : coeffs.blocks) {
    const auto& rep = cached_rep(block.lambda);
    const double weight = static_cast<double>(rep.dimension()) / static_cast<double>(total);
    for (std::uint64_t r = 0; r < total; ++r) {
      const Permutation sigma = coset_unrank(n, r);
      const Eigen::MatrixXd rho_inv = evaluate_rep(rep, sigma.inverse(), unused);
      // tr(A B) = sum_ij A_ij B_ji
      out(static_cast<Eigen::Index>(r)) += weight * (block.matrix.array() * rho_inv.transpose().array()).sum();
    }
  }
  return out;
}

double convolution_theorem_check(const AlgebraElement& f, const AlgebraElement& g, const ResourceCaps& caps) {
  const auto fg = fourier_naive(convolve(f, g), nullptr, caps);
  const auto fh = fourier_naive(f, nullptr, caps);
  const auto gh = fourier_naive(g, nullptr, caps);
  double worst = 0.0;
  for (std::size_t i = 0; i < fg.blocks.size(); ++i) {
    const Eigen::MatrixXcd product = fh.blocks[i].matrix * gh.blocks[i].matrix;
    worst = std::max(worst, (fg.blocks[i].matrix - product).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace pqc
