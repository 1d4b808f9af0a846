#include "dyck.hpp"

#include "words.hpp"

#include <doctest.h>

#include <set>

using namespace qchrom;

TEST_CASE("path validation and parsing") {
  CHECK_NOTHROW(DyckPath({2, 4, 4, 5, 5}));
  CHECK_THROWS_WITH_AS(DyckPath({1, 1, 3}), doctest::Contains("h(2)"), std::domain_error);
  CHECK_THROWS_AS(DyckPath({2, 1, 3}), std::domain_error);
  CHECK(DyckPath::parse("NNENNEENEE") == DyckPath({2, 4, 4, 5, 5}));
  CHECK(DyckPath::parse("2,4,4,5,5").steps() == "NNENNEENEE");
  CHECK_THROWS_WITH_AS(DyckPath::parse("2,x,3"), doctest::Contains("'x'"), std::domain_error);
}

TEST_CASE("catalan counts") {
  CHECK(all_paths(3).size() == 5);
  CHECK(all_paths(5).size() == 42);
  CHECK(all_paths(6).size() == 132);
}

TEST_CASE("poset relations of the five-vertex reference path") {
  DyckPath pi({2, 4, 4, 5, 5});
  std::set<std::pair<int, int>> rel;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (pi.less(i, j)) rel.insert({i, j});
  std::set<std::pair<int, int>> expect{{1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}};
  CHECK(rel == expect);
  std::vector<std::pair<int, int>> edges = pi.edges();
  std::vector<std::pair<int, int>> eexpect{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}};
  CHECK(edges == eexpect);
}

TEST_CASE("complete graph has no relations") {
  DyckPath k4({4, 4, 4, 4});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(!k4.less(i, j));
  CHECK(k4.edges().size() == 6);
}

TEST_CASE("a and b vectors of the big example path") {
  DyckPath pi({3, 3, 4, 6, 6, 6, 8, 9, 9});
  CHECK(pi.b_vec() == std::vector<int>{0, 1, 1, 0, 1, 2, 1, 1, 2});
  CHECK(pi.a_vec() == std::vector<int>{1, 1, 0, 2, 1, 1, 2, 1, 0});
  CHECK(pi.area() == 9);
  DyckPath empty({1, 2, 3, 4});
  CHECK(empty.area() == 0);
  CHECK(empty.a_vec() == std::vector<int>{0, 0, 0, 0});
  CHECK(empty.b_vec() == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("beta on the nine-vertex reference word") {
  DyckPath pi({3, 3, 4, 6, 6, 6, 8, 9, 9});
  std::vector<int> w{1, 2, 1, 1, 2, 2, 1, 1, 1};
  CHECK(beta_word(pi, w) == DyckPath({2, 3, 3, 5, 6, 6, 7, 9, 9}));
  // constant word keeps every edge
  CHECK(beta_word(pi, std::vector<int>(9, 1)) == pi);
  // all-distinct colors remove every edge
  std::vector<int> distinct{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(beta_word(pi, distinct) == DyckPath({1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST_CASE("beta for set partitions of (2,3,3)") {
  DyckPath pi({2, 3, 3});
  CHECK(beta_setpartition(pi, SetPartition({1, 1, 1})) == pi);
  // the falling-factorial example display assigns 1|23 the one-edge path on
  // the top-left block
  CHECK(beta_setpartition(pi, SetPartition({1, 2, 2})) == DyckPath({2, 2, 3}));
  CHECK(beta_setpartition(pi, SetPartition({1, 1, 2})) == DyckPath({1, 3, 3}));
  CHECK(beta_setpartition(pi, SetPartition({1, 2, 1})) == DyckPath({1, 2, 3}));
  CHECK(beta_setpartition(pi, SetPartition({1, 2, 3})) == DyckPath({1, 2, 3}));
}

TEST_CASE("induced subpath restricts the poset") {
  DyckPath pi({2, 4, 4, 5, 5});
  // relations restricted to {2,3,4} are empty, so the induced path is K_3
  CHECK(pi.induced({2, 3, 4}) == DyckPath({3, 3, 3}));
  // {1,3,5} is the chain 1 < 3 < 5
  CHECK(pi.induced({1, 3, 5}) == DyckPath({1, 2, 3}));
  CHECK(pi.induced({1, 2, 3}) == DyckPath({2, 3, 3}));
  CHECK(pi.induced({1, 2, 3, 4, 5}) == pi);
  CHECK_THROWS_AS(pi.induced({3, 2}), std::domain_error);
}

TEST_CASE("board from path") {
  CHECK(board_from_dyck(DyckPath({2, 4, 4, 6, 6, 7, 7})) == FerrersBoard({0, 0, 1, 1, 3, 3, 5}));
  // edgeless path: staircase board
  CHECK(board_from_dyck(DyckPath({1, 2, 3, 4})) == FerrersBoard({0, 1, 2, 3}));
  // complete graph: empty board
  CHECK(board_from_dyck(DyckPath({3, 3, 3})) == FerrersBoard({0, 0, 0}));
  for (const DyckPath& pi : all_paths(5)) {
    FerrersBoard b = board_from_dyck(pi);
    for (int i = 1; i <= 5; ++i) CHECK(b.height(i) <= i - 1);
  }
}

TEST_CASE("bounce paths") {
  CHECK(bounce_path({4}) == DyckPath({4, 4, 4, 4}));
  CHECK(bounce_path({2, 1, 3}) == DyckPath({2, 2, 3, 6, 6, 6}));
  CHECK_THROWS_AS(bounce_path({2, 0}), std::domain_error);
}

TEST_CASE("reversal is an involution matching a and b") {
  for (int n = 1; n <= 6; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      DyckPath rev = pi.reversed();
      CHECK(rev.reversed() == pi);
      CHECK(rev.area() == pi.area());
      std::vector<int> a = pi.a_vec();
      std::vector<int> brev = rev.b_vec();
      std::sort(a.begin(), a.end());
      std::sort(brev.begin(), brev.end());
      CHECK(a == brev);
    }
}

TEST_CASE("ferrers board validation") {
  CHECK_THROWS_AS(FerrersBoard({2, 1}), std::domain_error);
  CHECK_THROWS_AS(FerrersBoard({0, 5}), std::domain_error);
  FerrersBoard b({0, 1, 3, 4, 4, 4});
  CHECK(b.cell_count() == 16);
  CHECK(b.contains(3, 3));
  CHECK(!b.contains(3, 4));
}
