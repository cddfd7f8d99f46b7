#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqc {

/// Young diagram: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Row length, 0 beyond the last row. Rows are 0-based.
  int row(int i) const { return i < rows() ? parts_[i] : 0; }
  int column_height(int j) const;

  /// Corner cells (row, col), 0-based, ordered from the bottom row upwards.
  std::vector<std::pair<int, int>> removable_corners() const;
  Partition without_corner(int row) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// "3+2+1". Accepts an optional "6=" prefix that must agree with the sum.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

/// All partitions of n with at most max_rows parts, reverse lexicographic.
std::vector<Partition> enumerate_partitions(int n, int max_rows);
inline std::vector<Partition> enumerate_partitions(int n) { return enumerate_partitions(n, n); }

/// dim S^lambda = n! / prod(hook lengths).
std::uint64_t hook_length_dimension(const Partition& lambda);

/// dim W_lambda for SU(d): prod_{i<j} (l_i - l_j + j - i) / (j - i), with the
/// partition padded by zeros to d parts. Throws DomainError if lambda has
/// more than d rows.
std::uint64_t weyl_dimension(const Partition& lambda, int d);

/// Standard Young tableau. rows()[r][c] holds the entry at row r, column c.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws DomainError if the filling is not standard.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const { return n_; }
  /// 0-based (row, col) of entry k.
  std::pair<int, int> position(int k) const { return pos_[k - 1]; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> pos_;
  int n_ = 0;
};

/// Last-letter order: tableaux grouped by the corner holding n (bottom corner
/// first), each group ordered recursively the same way on n-1 entries. This
/// ordering makes the Young orthogonal form block diagonal under S_{n-1}.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda);

/// Rows filled left to right, top to bottom: [1..l1], [l1+1..l1+l2], ...
StandardTableau row_reading_tableau(const Partition& lambda);

/// column - row of the cell holding k.
int content(const StandardTableau& t, int k);
/// content(k+1) - content(k); never zero.
int axial_distance(const StandardTableau& t, int k);

/// Tableau with k and k+1 exchanged; nullopt when that is not standard.
std::optional<StandardTableau> swap_entries(const StandardTableau& t, int k);

struct SchurWeylRow {
  Partition lambda;
  std::uint64_t weyl_dim = 0;   // dim W_lambda (multiplicity of S^lambda)
  std::uint64_t specht_dim = 0; // dim S^lambda
};

struct SchurWeylReport {
  int n = 0;
  int d = 0;
  std::vector<SchurWeylRow> rows;
  std::uint64_t total = 0;    // sum of weyl_dim * specht_dim
  std::uint64_t expected = 0; // d^n
  bool ok() const { return total == expected; }
};

/// Checks sum over lambda (<= d rows) of dim W_lambda * dim S^lambda == d^n.
SchurWeylReport schur_weyl_dimension_check(int n, int d);

}  // namespace pqc
