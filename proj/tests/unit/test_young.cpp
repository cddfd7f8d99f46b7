#include <doctest.h>

#include "../oracles.hpp"
#include "pqc/young.hpp"

using namespace pqc;

TEST_SUITE("young") {

TEST_CASE("partition enumeration") {
  const std::uint64_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_partitions(n).size() == p[n]);
  const auto four = enumerate_partitions(4);
  CHECK(to_string(four.front()) == "4");
  CHECK(to_string(four.back()) == "1+1+1+1");
  CHECK(enumerate_partitions(6, 2).size() == oracle::partitions(6, 2).size());
  CHECK(parse_partition("6=3+2+1") == Partition({3, 2, 1}));
  CHECK_THROWS_AS(parse_partition("2+3"), DomainError);
  CHECK_THROWS_AS(parse_partition("5=3+1"), DomainError);
}

TEST_CASE("hook formula against tableau counting") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& rows : oracle::partitions(n, n)) {
      const Partition l(rows);
      REQUIRE(hook_length_dimension(l) == oracle::syt_count(rows));
      REQUIRE(hook_length_dimension(l) == oracle::hook_dim(rows));
      REQUIRE(enumerate_standard_tableaux(l).size() == oracle::syt_count(rows));
    }
  }
  CHECK(hook_length_dimension(Partition({4, 4})) == 14);
  CHECK(hook_length_dimension(Partition({3, 3})) == 5);
}

TEST_CASE("Weyl dimension counts semistandard tableaux") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& rows : oracle::partitions(n, d)) {
        REQUIRE(weyl_dimension(Partition(rows), d) == oracle::ssyt_count(rows, d));
      }
    }
  }
  CHECK_THROWS_AS(weyl_dimension(Partition({1, 1, 1}), 2), DomainError);
}

TEST_CASE("Schur-Weyl table") {
  const auto r = schur_weyl_dimension_check(6, 2);
  CHECK(r.ok());
  CHECK(r.total == 64);
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].weyl_dim == 7);
  CHECK(r.rows[2].specht_dim == 9);
  const auto one = schur_weyl_dimension_check(1, 2);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.total == 2);
}

TEST_CASE("tableaux: last-letter order, contents, swaps") {
  const auto tabs = enumerate_standard_tableaux(Partition({2, 1}));
  REQUIRE(tabs.size() == 2);
  // n = 3 sits in the bottom corner first.
  CHECK(tabs[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(tabs[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(content(tabs[0], 3) == -1);
  CHECK(axial_distance(tabs[0], 2) == -2);
  CHECK(swap_entries(tabs[0], 2).value() == tabs[1]);
  CHECK_FALSE(swap_entries(tabs[0], 1).has_value());
  CHECK(row_reading_tableau(Partition({3, 1})).rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), DomainError);
}

}
