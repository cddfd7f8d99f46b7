#include "pqc/young_basis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

#include "pqc/yor.hpp"

namespace pqc {

namespace {

using Gather = std::vector<std::uint32_t>;

struct Workspace {
  int n;
  int d;
  std::size_t dim;
  // swaps[i][k] gathers pi((i k)) for 1 <= i < k <= n.
  std::vector<std::vector<Gather>> swaps;
  std::vector<std::vector<int>> counts;  // letter counts of each basis index
  std::vector<std::size_t> place;        // place[q] = d^(n-q)

  Workspace(int n_, int d_, const ResourceCaps& caps) : n(n_), d(d_), dim(qudit_dimension(d_, n_, caps)) {
    swaps.assign(n + 1, std::vector<Gather>(n + 1));
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) swaps[i][k] = qudit_permutation_gather(Permutation::transposition(n, i, k), d, caps);
    }
    place.assign(n + 1, 1);
    for (int q = n - 1; q >= 1; --q) place[q] = place[q + 1] * static_cast<std::size_t>(d);
    counts.assign(dim, std::vector<int>(d, 0));
    for (std::size_t x = 0; x < dim; ++x) {
      std::size_t rest = x;
      for (int q = 0; q < n; ++q) {
        ++counts[x][rest % static_cast<std::size_t>(d)];
        rest /= static_cast<std::size_t>(d);
      }
    }
  }

  Eigen::VectorXd gather(const Gather& g, const Eigen::VectorXd& v) const {
    Eigen::VectorXd out(v.size());
    for (std::size_t y = 0; y < dim; ++y) out(static_cast<Eigen::Index>(y)) = v(g[y]);
    return out;
  }

  Eigen::VectorXd jucys_murphy(int k, const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
    for (int i = 1; i < k; ++i) out += gather(swaps[i][k], v);
    return out;
  }

  // F_a: every occurrence of letter a becomes a+1, summed over qudits.
  Eigen::VectorXd lower(int a, const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
    for (std::size_t x = 0; x < dim; ++x) {
      const double amp = v(static_cast<Eigen::Index>(x));
      if (amp == 0.0) continue;
      for (int q = 1; q <= n; ++q) {
        if (static_cast<int>((x / place[q]) % static_cast<std::size_t>(d)) == a) {
          out(static_cast<Eigen::Index>(x + place[q])) += amp;
        }
      }
    }
    return out;
  }
};

// Contents of the cells that can be added to the shape with the given row lengths.
std::vector<int> addable_contents(const std::vector<int>& rows) {
  std::vector<int> out;
  for (int r = 0; r <= static_cast<int>(rows.size()); ++r) {
    const int len = r < static_cast<int>(rows.size()) ? rows[r] : 0;
    if (r == 0 || len < rows[r - 1]) out.push_back(len - r);
    if (len == 0) break;
  }
  return out;
}

// Projects v onto the joint Jucys-Murphy eigenspace with the content vector of t.
Eigen::VectorXd project_onto_contents(const Workspace& ws, const StandardTableau& t, Eigen::VectorXd v) {
  std::vector<int> rows;
  rows.push_back(1);  // entry 1 sits at (0, 0)
  for (int k = 2; k <= ws.n; ++k) {
    const int target = content(t, k);
    for (int c : addable_contents(rows)) {
      if (c == target) continue;
      v = (ws.jucys_murphy(k, v) - c * v) / static_cast<double>(target - c);
    }
    const int r = t.position(k).first;
    if (r == static_cast<int>(rows.size())) rows.push_back(0);
    ++rows[r];
  }
  return v;
}

Eigen::VectorXd highest_weight_vector(const Workspace& ws, const Partition& lambda, const StandardTableau& t0) {
  std::vector<int> target(ws.d, 0);
  for (int r = 0; r < lambda.rows(); ++r) target[r] = lambda.row(r);
  for (std::size_t x = 0; x < ws.dim; ++x) {
    if (ws.counts[x] != target) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ws.dim));
    v(static_cast<Eigen::Index>(x)) = 1.0;
    v = project_onto_contents(ws, t0, v);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    v /= norm;
    // A second pass removes leakage amplified by the first.
    v = project_onto_contents(ws, t0, v);
    return v / v.norm();
  }
  throw std::logic_error("no highest-weight vector found for " + to_string(lambda));
}

struct WeightedVector {
  std::vector<int> weight;
  Eigen::VectorXd vector;
};

// Orthonormal basis of W_lambda (x) v_{t0}, ordered by weight counts
// descending, then Gram-Schmidt order.
std::vector<WeightedVector> multiplicity_basis(const Workspace& ws, const Eigen::VectorXd& top,
                                               const std::vector<int>& top_weight) {
  std::map<std::vector<int>, std::vector<Eigen::VectorXd>, std::greater<>> accepted;
  std::map<std::vector<int>, std::vector<Eigen::VectorXd>, std::greater<>> level;
  level[top_weight].push_back(top);
  while (!level.empty()) {
    std::map<std::vector<int>, std::vector<Eigen::VectorXd>, std::greater<>> next;
    for (auto& [weight, candidates] : level) {
      auto& basis = accepted[weight];
      for (Eigen::VectorXd v : candidates) {
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& b : basis) v -= b.dot(v) * b;
        }
        const double norm = v.norm();
        if (norm < 1e-8) continue;
        basis.push_back(v / norm);
      }
      for (const auto& b : basis) {
        for (int a = 0; a + 1 < ws.d; ++a) {
          if (weight[a] == 0) continue;
          std::vector<int> lowered = weight;
          --lowered[a];
          ++lowered[a + 1];
          Eigen::VectorXd v = ws.lower(a, b);
          const double norm = v.norm();
          if (norm < 1e-8) continue;
          next[lowered].push_back(v / norm);
        }
      }
    }
    level = std::move(next);
  }
  std::vector<WeightedVector> out;
  for (auto& [weight, basis] : accepted) {
    for (auto& b : basis) out.push_back({weight, std::move(b)});
  }
  return out;
}

}  // namespace

std::vector<YoungBasisVector> young_basis(int n, int d, const ResourceCaps& caps) {
  if (d < 2) throw DomainError("young basis needs d >= 2");
  const std::size_t dim = qudit_dimension(d, n, caps);
  if (dim > caps.amplitudes / dim) {
    throw ResourceError("a full basis of " + std::to_string(dim) + " vectors exceeds the amplitude cap " +
                        std::to_string(caps.amplitudes));
  }
  const Workspace ws(n, d, caps);
  std::vector<YoungBasisVector> out;
  out.reserve(dim);
  for (const auto& lambda : enumerate_partitions(n, d)) {
    const auto& rep = cached_rep(lambda);
    const StandardTableau t0 = row_reading_tableau(lambda);
    const int i0 = rep.index_of(t0);
    std::vector<int> top_weight(d, 0);
    for (int r = 0; r < lambda.rows(); ++r) top_weight[r] = lambda.row(r);

    const auto copies = multiplicity_basis(ws, highest_weight_vector(ws, lambda, t0), top_weight);
    if (copies.size() != weyl_dimension(lambda, d)) {
      throw std::logic_error("multiplicity space of " + to_string(lambda) + " has the wrong dimension");
    }

    // vectors[w][T]
    std::vector<std::vector<Eigen::VectorXd>> vectors(copies.size(),
                                                      std::vector<Eigen::VectorXd>(rep.dimension()));
    for (std::size_t w = 0; w < copies.size(); ++w) vectors[w][i0] = copies[w].vector;
    std::vector<bool> seen(rep.dimension(), false);
    seen[i0] = true;
    std::deque<int> queue{i0};
    while (!queue.empty()) {
      const int j = queue.front();
      queue.pop_front();
      for (int k = 1; k < n; ++k) {
        const auto& g = rep.generator_table(k);
        const int u = g.partner[j];
        if (u < 0 || seen[u]) continue;
        seen[u] = true;
        queue.push_back(u);
        // pi(s_k) v_j = diag_j v_j + off_j v_u
        for (auto& per_w : vectors) {
          per_w[u] = (ws.gather(ws.swaps[k][k + 1], per_w[j]) - g.diagonal[j] * per_w[j]) / g.off_diagonal[j];
        }
      }
    }

    for (int t = 0; t < rep.dimension(); ++t) {
      for (std::size_t w = 0; w < copies.size(); ++w) {
        YoungBasisVector v;
        v.lambda = lambda;
        v.tableau = rep.tableaux()[t];
        v.tableau_index = t;
        v.weight_index = static_cast<int>(w);
        v.weight = copies[w].weight;
        v.vector = Statevector(d, n, vectors[w][t].cast<cplx>());
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

int find_basis_vector(const std::vector<YoungBasisVector>& basis, const Partition& lambda, int tableau_index,
                      int weight_index) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (b.lambda == lambda && b.tableau_index == tableau_index && b.weight_index == weight_index) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

cplx exact_matrix_element(const Statevector& u, const Statevector& v, const AlgebraElement& f, double t,
                          const ResourceCaps& caps) {
  if (u.qudits() != f.degree() || v.qudits() != f.degree() || u.local_dimension() != v.local_dimension()) {
    throw SizeMismatch("states and element disagree on n or d");
  }
  const ExactEvolution evo(f, u.local_dimension(), caps);
  return evo.matrix_element(u.amplitudes(), v.amplitudes(), t);
}

}  // namespace pqc
