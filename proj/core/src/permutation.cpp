#include "pqc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "pqc/error.hpp"

namespace pqc {

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("permutation degree must be non-negative");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("one-line form is not a bijection of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  // Rightmost cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> img = result.images_;
    std::vector<int> step(n);
    std::iota(step.begin(), step.end(), 1);
    std::vector<bool> used(n + 1, false);
    for (std::size_t a = 0; a < cyc.size(); ++a) {
      int from = cyc[a];
      int to = cyc[(a + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw DomainError("cycle point out of range 1.." + std::to_string(n));
      }
      if (used[from]) throw DomainError("repeated point inside a cycle");
      used[from] = true;
      step[from - 1] = to;
    }
    // result := step * result
    for (int i = 0; i < n; ++i) img[i] = step[result.images_[i] - 1];
    result.images_ = std::move(img);
  }
  return result;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw DomainError("transposition needs two distinct points in 1..n");
  }
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("cannot compose permutations of degree " + std::to_string(p.size()) +
                       " and " + std::to_string(q.size()));
  }
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[i - 1] = p(q(i));
  return Permutation::from_images(std::move(img));
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(p.size() + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<int> support(const Permutation& p) {
  std::vector<int> moved;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) != i) moved.push_back(i);
  }
  return moved;
}

int locality(const Permutation& p) { return static_cast<int>(support(p).size()); }

int span_locality(const Permutation& p) {
  auto s = support(p);
  return s.empty() ? 0 : s.back() - s.front() + 1;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++count;
    }
  }
  return count;
}

std::vector<std::pair<int, int>> transposition_decomposition(const Permutation& p) {
  std::vector<std::pair<int, int>> ts;
  for (const auto& cyc : cycle_decomposition(p)) {
    for (std::size_t a = 0; a + 1 < cyc.size(); ++a) {
      ts.emplace_back(std::min(cyc[a], cyc[a + 1]), std::max(cyc[a], cyc[a + 1]));
    }
  }
  return ts;
}

std::vector<int> adjacent_word(const Permutation& p) {
  // Bubble sort the one-line form; swapping positions k, k+1 is p := p * s_k.
  // Once sorted, p * s_{j1} * ... * s_{jm} = id, so p = s_{jm} * ... * s_{j1}.
  std::vector<int> line(p.images().begin(), p.images().end());
  std::vector<int> swaps;
  const int n = p.size();
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int k = 1; k < n - pass; ++k) {
      if (line[k - 1] > line[k]) {
        std::swap(line[k - 1], line[k]);
        swaps.push_back(k);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation product_of_transpositions(int n, std::span<const std::pair<int, int>> ts) {
  Permutation result = Permutation::identity(n);
  for (const auto& [i, j] : ts) result = result * Permutation::transposition(n, i, j);
  return result;
}

Permutation product_of_adjacent(int n, std::span<const int> word) {
  Permutation result = Permutation::identity(n);
  for (int k : word) result = result * Permutation::adjacent(n, k);
  return result;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ResourceError("integer count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t subfactorial(int l) {
  // !0 = 1, !1 = 0, !l = (l - 1)(!(l-1) + !(l-2)).
  std::uint64_t prev2 = 1, prev1 = 0;
  if (l == 0) return prev2;
  for (int m = 2; m <= l; ++m) {
    std::uint64_t next = checked_mul(static_cast<std::uint64_t>(m - 1), prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

std::uint64_t derangement_count(int n, int l) {
  if (l < 0 || l > n) {
    throw DomainError("derangement_count needs 0 <= l <= n, got l=" + std::to_string(l) +
                      " n=" + std::to_string(n));
  }
  return checked_mul(binomial(n, l), subfactorial(l));
}

std::uint64_t count_k_local(int n, int k) {
  std::uint64_t total = 0;
  for (int l = 2; l <= std::min(k, n); ++l) total += derangement_count(n, l);
  return total;
}

std::vector<Permutation> enumerate_k_local(int n, int k) {
  std::vector<Permutation> out;
  for (int l = 2; l <= std::min(k, n); ++l) {
    std::vector<Permutation> level;
    // Choose the moved set, then every derangement of it.
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - l, pick.end(), 1);
    do {
      std::vector<int> pts;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) pts.push_back(i + 1);
      }
      std::vector<int> img = pts;
      do {
        bool deranged = true;
        for (int a = 0; a < l; ++a) deranged = deranged && img[a] != pts[a];
        if (!deranged) continue;
        std::vector<int> full(n);
        std::iota(full.begin(), full.end(), 1);
        for (int a = 0; a < l; ++a) full[pts[a] - 1] = img[a];
        level.push_back(Permutation::from_images(std::move(full)));
      } while (std::next_permutation(img.begin(), img.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Permutation coset_representative(int n, int j) {
  if (j < 1 || j > n) throw DomainError("coset index out of range");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  // n -> j, and i -> i + 1 for j <= i < n.
  for (int i = j; i < n; ++i) img[i - 1] = i + 1;
  img[n - 1] = j;
  return Permutation::from_images(std::move(img));
}

std::size_t coset_rank(const Permutation& p) {
  std::vector<int> line(p.images().begin(), p.images().end());
  std::size_t rank = 0;
  for (int m = p.size(); m >= 2; --m) {
    const int j = line[m - 1];
    rank += static_cast<std::size_t>(j - 1) * factorial(m - 1);
    // Apply c_j^{-1}: j -> m, i -> i - 1 for j < i <= m; then drop point m.
    for (int i = 0; i < m - 1; ++i) {
      if (line[i] > j) --line[i];
    }
    line.pop_back();
  }
  return rank;
}

Permutation coset_unrank(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw DomainError("coset rank out of range");
  std::vector<int> line{1};
  // Rebuild from S_1 upwards: digits are read from the most significant end.
  std::vector<int> digits(n + 1, 1);
  for (int m = n; m >= 2; --m) {
    const std::uint64_t block = factorial(m - 1);
    digits[m] = static_cast<int>(rank / block) + 1;
    rank %= block;
  }
  for (int m = 2; m <= n; ++m) {
    const int j = digits[m];
    // p = c_j * tau with tau fixing m.
    for (int& v : line) {
      if (v >= j) ++v;
    }
    line.push_back(j);
  }
  if (n == 0) line.clear();
  return Permutation::from_images(std::move(line));
}

std::vector<Permutation> enumerate_all(int n) {
  const std::size_t total = factorial(n);
  std::vector<Permutation> out;
  out.reserve(total);
  for (std::size_t r = 0; r < total; ++r) out.push_back(coset_unrank(n, r));
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << '(';
    for (std::size_t a = 0; a < cyc.size(); ++a) os << (a ? " " : "") << cyc[a];
    os << ')';
  }
  return os.str();
}

std::string to_one_line_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? "," : "") << p(i);
  os << ']';
  return os.str();
}

namespace {

std::vector<int> parse_ints(std::string_view body, std::string_view what) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("unexpected character '" + std::string(1, c) + "' in " + std::string(what));
    }
    int v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i] - '0');
      ++i;
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty permutation text");

  if (text.front() == '[') {
    if (text.back() != ']') throw DomainError("one-line permutation must end with ']'");
    auto images = parse_ints(text.substr(1, text.size() - 2), "one-line permutation");
    if (n != 0 && static_cast<int>(images.size()) != n) {
      throw SizeMismatch("one-line permutation has length " + std::to_string(images.size()) +
                         ", expected " + std::to_string(n));
    }
    return Permutation::from_images(std::move(images));
  }

  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw DomainError("cycle notation expects '(' at: " + std::string(text.substr(i)));
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw DomainError("unterminated cycle in: " + std::string(text));
    auto cyc = parse_ints(text.substr(i + 1, close - i - 1), "cycle");
    for (int v : cyc) max_point = std::max(max_point, v);
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  if (n == 0) n = std::max(max_point, 1);
  if (max_point > n) {
    throw DomainError("cycle point " + std::to_string(max_point) + " exceeds degree " + std::to_string(n));
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace pqc
