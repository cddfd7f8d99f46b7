#include "pqc/yor.hpp"

#include <cmath>
#include <mutex>

#include "pqc/error.hpp"

namespace pqc {

YoungOrthogonalRep::YoungOrthogonalRep(Partition lambda)
    : lambda_(std::move(lambda)), tableaux_(enumerate_standard_tableaux(lambda_)) {
  for (int i = 0; i < dimension(); ++i) index_.emplace(tableaux_[i], i);
  const int n = degree();
  generators_.reserve(n > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) {
    AdjacentGenerator g;
    g.diagonal.resize(dimension());
    g.off_diagonal.assign(dimension(), 0.0);
    g.partner.assign(dimension(), -1);
    for (int t = 0; t < dimension(); ++t) {
      const double r = axial_distance(tableaux_[t], k);
      g.diagonal[t] = 1.0 / r;
      if (auto swapped = swap_entries(tableaux_[t], k)) {
        g.partner[t] = index_.at(*swapped);
        g.off_diagonal[t] = std::sqrt(1.0 - 1.0 / (r * r));
      }
    }
    generators_.push_back(std::move(g));
  }
}

int YoungOrthogonalRep::index_of(const StandardTableau& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

Eigen::MatrixXd YoungOrthogonalRep::generator(int k) const {
  if (k < 1 || k >= degree()) throw DomainError("generator index must satisfy 1 <= k < n");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dimension(), dimension());
  apply_generator_left(k, m);
  return m;
}

Eigen::MatrixXd YoungOrthogonalRep::operator()(const Permutation& p) const {
  if (p.size() != degree()) {
    throw SizeMismatch("partition of " + std::to_string(degree()) + " cannot represent a permutation of degree " +
                       std::to_string(p.size()));
  }
  // p = s_{k1} ... s_{km}: multiply generators onto the identity from the right end.
  const auto word = adjacent_word(p);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dimension(), dimension());
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_generator_left(*it, m);
  return m;
}

Eigen::MatrixXd yor_generator(const Partition& lambda, int k) { return cached_rep(lambda).generator(k); }

Eigen::MatrixXd yor(const Partition& lambda, const Permutation& p) { return cached_rep(lambda)(p); }

const YoungOrthogonalRep& cached_rep(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<YoungOrthogonalRep>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[lambda];
  if (!slot) slot = std::make_unique<YoungOrthogonalRep>(lambda);
  return *slot;
}

}  // namespace pqc
