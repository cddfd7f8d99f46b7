#pragma once

#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "pqc/permutation.hpp"
#include "pqc/young.hpp"

namespace pqc {

/// Sparse form of rho_lambda(s_k) in Young's orthogonal form. Every row has
/// at most two non-zeros: the diagonal 1/r and, when s_k T is standard, the
/// off-diagonal sqrt(1 - 1/r^2) at column partner[T].
struct AdjacentGenerator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  std::vector<int> partner;  // -1 when s_k T is not standard
};

/// Young orthogonal representation of S_n for one partition. Rows and
/// columns are indexed by standard tableaux in last-letter order.
///
/// The generator tables are built once in the constructor; afterwards the
/// object is read-only and may be shared between threads.
class YoungOrthogonalRep {
 public:
  explicit YoungOrthogonalRep(Partition lambda);

  const Partition& partition() const { return lambda_; }
  int degree() const { return lambda_.size(); }
  int dimension() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
  /// Index of t in last-letter order, or -1.
  int index_of(const StandardTableau& t) const;

  const AdjacentGenerator& generator_table(int k) const { return generators_.at(k - 1); }
  Eigen::MatrixXd generator(int k) const;
  Eigen::MatrixXd operator()(const Permutation& p) const;

  /// m := rho(s_k) * m, in place. Returns the number of multiply-adds.
  template <typename Derived>
  std::size_t apply_generator_left(int k, Eigen::MatrixBase<Derived>& m) const;

 private:
  Partition lambda_;
  std::vector<StandardTableau> tableaux_;
  std::map<StandardTableau, int> index_;
  std::vector<AdjacentGenerator> generators_;
};

Eigen::MatrixXd yor_generator(const Partition& lambda, int k);
/// Throws SizeMismatch if lambda is not a partition of p.size().
Eigen::MatrixXd yor(const Partition& lambda, const Permutation& p);

/// Process-wide cache of representations, keyed by partition. Entries are
/// never evicted; returned references stay valid for the program lifetime.
const YoungOrthogonalRep& cached_rep(const Partition& lambda);

template <typename Derived>
std::size_t YoungOrthogonalRep::apply_generator_left(int k, Eigen::MatrixBase<Derived>& m) const {
  const AdjacentGenerator& g = generators_[k - 1];
  const int dim = dimension();
  std::size_t ops = 0;
  std::vector<bool> done(dim, false);
  for (int t = 0; t < dim; ++t) {
    if (done[t]) continue;
    const int u = g.partner[t];
    if (u < 0) {
      m.row(t) *= g.diagonal[t];
      ops += static_cast<std::size_t>(m.cols());
      done[t] = true;
      continue;
    }
    // 2x2 block [[a, b], [b, c]] acting on rows t and u.
    auto row_t = m.row(t).eval();
    m.row(t) = g.diagonal[t] * row_t + g.off_diagonal[t] * m.row(u);
    m.row(u) = g.off_diagonal[u] * row_t + g.diagonal[u] * m.row(u);
    ops += 4 * static_cast<std::size_t>(m.cols());
    done[t] = done[u] = true;
  }
  return ops;
}

}  // namespace pqc
