#pragma once

// Reference computations written from definitions, sharing no code with the
// library beyond its value types.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "pqc/group_algebra.hpp"
#include "pqc/young.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<int> images(const pqc::Permutation& p) {
  std::vector<int> v(p.size());
  for (int i = 1; i <= p.size(); ++i) v[i - 1] = p(i);
  return v;
}

// (p o q)(i) = p(q(i)) on 1-based image vectors.
inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i] - 1];
  return r;
}

inline std::uint64_t fact(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// All permutations of 1..n via std::next_permutation.
inline std::vector<std::vector<int>> all_images(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline int moved(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] != static_cast<int>(i) + 1;
  return c;
}

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// Qudit q (1-based) is digit q of a big-endian base-d index. The letter on
// qudit q moves to qudit sigma(q).
inline Eigen::MatrixXcd perm_matrix(const std::vector<int>& sigma, int d) {
  const int n = static_cast<int>(sigma.size());
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> in(n), out(n);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t r = x;
    for (int q = n - 1; q >= 0; --q) {
      in[q] = static_cast<int>(r % static_cast<std::size_t>(d));
      r /= static_cast<std::size_t>(d);
    }
    for (int q = 0; q < n; ++q) out[sigma[q] - 1] = in[q];
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) y = y * static_cast<std::size_t>(d) + static_cast<std::size_t>(out[q]);
    m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return m;
}

inline Eigen::MatrixXcd hamiltonian(const pqc::AlgebraElement& f, int d) {
  Eigen::MatrixXcd h;
  for (const auto& [p, c] : f.terms()) {
    const Eigen::MatrixXcd m = c * perm_matrix(images(p), d);
    if (h.size() == 0) h = m;
    else h += m;
  }
  return h;
}

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

inline std::uint64_t hook_dim(const std::vector<int>& rows) {
  const int n = std::accumulate(rows.begin(), rows.end(), 0);
  double prod = 1.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < rows.size(); ++r) below += rows[r] > j;
      prod *= rows[i] - j + below;
    }
  }
  return static_cast<std::uint64_t>(static_cast<double>(fact(n)) / prod + 0.5);
}

// Number of semistandard tableaux of the shape with entries 1..d.
inline std::uint64_t ssyt_count(const std::vector<int>& rows, int d) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::vector<std::vector<int>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) t[i].assign(static_cast<std::size_t>(rows[i]), 0);
  std::uint64_t count = 0;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= d; ++v) {
      t[r][c] = v;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
  return count;
}

// Standard tableaux counted by placing 1..n one at a time.
inline std::uint64_t syt_count(const std::vector<int>& rows) {
  std::vector<int> filled(rows.size(), 0);
  const int n = std::accumulate(rows.begin(), rows.end(), 0);
  auto go = [&](auto&& self, int placed) -> std::uint64_t {
    if (placed == n) return 1;
    std::uint64_t s = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (filled[r] < rows[r] && (r == 0 || filled[r - 1] > filled[r])) {
        ++filled[r];
        s += self(self, placed + 1);
        --filled[r];
      }
    }
    return s;
  };
  return go(go, 0);
}

// Partitions of n with at most max_rows rows, any order.
inline std::vector<std::vector<int>> partitions(int n, int max_rows) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto go = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  go(go, n, n);
  return out;
}

}  // namespace oracle
