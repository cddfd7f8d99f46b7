#include "pqc/young.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "pqc/error.hpp"
#include "pqc/permutation.hpp"

namespace pqc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_height(int j) const {
  int h = 0;
  while (h < rows() && parts_[h] > j) ++h;
  return h;
}

std::vector<std::pair<int, int>> Partition::removable_corners() const {
  std::vector<std::pair<int, int>> corners;
  for (int r = rows() - 1; r >= 0; --r) {
    if (r == rows() - 1 || parts_[r] > parts_[r + 1]) corners.emplace_back(r, parts_[r] - 1);
  }
  return corners;
}

Partition Partition::without_corner(int r) const {
  std::vector<int> p = parts_;
  if (r < 0 || r >= rows() || (r + 1 < rows() && p[r] == p[r + 1])) {
    throw DomainError("row " + std::to_string(r) + " has no removable corner");
  }
  if (--p[r] == 0) p.pop_back();
  return Partition(std::move(p));
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  int declared = -1;
  if (auto eq = s.find('='); eq != std::string::npos) {
    declared = std::stoi(s.substr(0, eq));
    s = s.substr(eq + 1);
  }
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, s.find(',') != std::string::npos ? ',' : '+')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw DomainError("malformed partition: " + std::string(text));
    }
    parts.push_back(std::stoi(tok));
  }
  if (parts.empty()) throw DomainError("empty partition");
  Partition p(std::move(parts));
  if (declared >= 0 && declared != p.size()) {
    throw DomainError("partition sums to " + std::to_string(p.size()) + ", not " + std::to_string(declared));
  }
  return p;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (int i = 0; i < p.rows(); ++i) os << (i ? "+" : "") << p.parts()[i];
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_rows) {
  if (n < 1 || max_rows < 1) throw DomainError("enumerate_partitions needs n >= 1 and max_rows >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_rows, cur, out);
  return out;
}

std::uint64_t hook_length_dimension(const Partition& lambda) {
  using u128 = unsigned __int128;
  if (lambda.size() > 33) throw ResourceError("hook length formula limited to n <= 33");
  u128 num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= static_cast<u128>(k);
  for (int r = 0; r < lambda.rows(); ++r) {
    for (int c = 0; c < lambda.row(r); ++c) {
      const int arm = lambda.row(r) - c - 1;
      const int leg = lambda.column_height(c) - r - 1;
      den *= static_cast<u128>(arm + leg + 1);
    }
  }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t weyl_dimension(const Partition& lambda, int d) {
  if (d < 1) throw DomainError("weyl_dimension needs d >= 1");
  if (lambda.rows() > d) {
    throw DomainError("partition " + to_string(lambda) + " has more than d=" + std::to_string(d) + " rows");
  }
  using i128 = __int128;
  i128 num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= static_cast<i128>(lambda.row(i) - lambda.row(j) + j - i);
      den *= static_cast<i128>(j - i);
    }
  }
  return static_cast<std::uint64_t>(num / den);
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  n_ = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw DomainError("tableau rows must be non-empty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw DomainError("tableau shape is not a partition");
    n_ += static_cast<int>(rows_[r].size());
  }
  pos_.assign(n_, {-1, -1});
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n_ || pos_[v - 1].first >= 0) throw DomainError("tableau entries must be exactly 1..n");
      pos_[v - 1] = {static_cast<int>(r), static_cast<int>(c)};
      if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

namespace {

void tableaux_rec(const Partition& lambda, std::vector<std::vector<std::vector<int>>>& out) {
  if (lambda.size() == 1) {
    out.push_back({{1}});
    return;
  }
  const int n = lambda.size();
  for (const auto& [r, c] : lambda.removable_corners()) {
    std::vector<std::vector<std::vector<int>>> sub;
    tableaux_rec(lambda.without_corner(r), sub);
    for (auto& t : sub) {
      if (static_cast<int>(t.size()) <= r) t.emplace_back();
      t[r].push_back(n);
      out.push_back(std::move(t));
    }
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda) {
  if (lambda.size() == 0) throw DomainError("empty partition has no tableaux");
  std::vector<std::vector<std::vector<int>>> raw;
  tableaux_rec(lambda, raw);
  std::vector<StandardTableau> out;
  out.reserve(raw.size());
  for (auto& t : raw) out.emplace_back(std::move(t));
  return out;
}

StandardTableau row_reading_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : lambda.parts()) {
    rows.emplace_back();
    for (int c = 0; c < part; ++c) rows.back().push_back(next++);
  }
  return StandardTableau(std::move(rows));
}

int content(const StandardTableau& t, int k) {
  if (k < 1 || k > t.size()) throw DomainError("content: entry out of range");
  const auto [r, c] = t.position(k);
  return c - r;
}

int axial_distance(const StandardTableau& t, int k) {
  if (k < 1 || k >= t.size()) throw DomainError("axial_distance needs 1 <= k < n");
  return content(t, k + 1) - content(t, k);
}

std::optional<StandardTableau> swap_entries(const StandardTableau& t, int k) {
  const auto [r1, c1] = t.position(k);
  const auto [r2, c2] = t.position(k + 1);
  if (r1 == r2 || c1 == c2) return std::nullopt;
  auto rows = t.rows();
  std::swap(rows[r1][c1], rows[r2][c2]);
  // Only k and k+1 moved and they were not adjacent, so the result is standard.
  return StandardTableau(std::move(rows));
}

SchurWeylReport schur_weyl_dimension_check(int n, int d) {
  SchurWeylReport report;
  report.n = n;
  report.d = d;
  report.expected = 1;
  for (int i = 0; i < n; ++i) report.expected *= static_cast<std::uint64_t>(d);
  for (const auto& lambda : enumerate_partitions(n, d)) {
    SchurWeylRow row{lambda, weyl_dimension(lambda, d), hook_length_dimension(lambda)};
    report.total += row.weyl_dim * row.specht_dim;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pqc
