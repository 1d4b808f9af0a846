#include "rook.hpp"

#include "chromatic.hpp"
#include "words.hpp"

#include <doctest.h>

#include <set>

using namespace qchrom;

TEST_CASE("pinned placement statistics") {
  FerrersBoard left({2, 3, 5, 5, 5, 6});
  RookPlacement four{6, {{2, 3}, {3, 2}, {4, 4}, {5, 1}}};
  CHECK(inv_B(left, four) == 8);
  FerrersBoard right({0, 1, 3, 4, 4, 4});
  RookPlacement full{6, {{1, 2}, {2, 4}, {3, 1}, {4, 5}, {5, 3}, {6, 6}}};
  CHECK(haglund_stat(right, full) == 10);
  // that placement has 2 rooks on the board and contributes q^10 to h_2
  CHECK(hit_stat_route(right, 2).coeff(10) >= 1);
}

TEST_CASE("rook polynomial basics") {
  FerrersBoard b({0, 1});
  CHECK(r_poly(b, 1) == ZPolyQ(1));
  CHECK(r_poly(b, 0) == ZPolyQ::q_power(1));
  CHECK(r_poly(b, 2).is_zero());
  // k = 0 leaves every cell uncancelled
  FerrersBoard big({1, 2, 3, 3});
  CHECK(r_poly(big, 0) == ZPolyQ::q_power(big.cell_count()));
  // placement count at q=1: 1+2+2+4+4+6 over the column pairs
  CHECK(r_poly(big, 2).eval_at_one() == 19);
}

TEST_CASE("algebraic hit polynomials of tiny boards") {
  std::vector<ZPolyQ> h = hit_algebraic(FerrersBoard({0, 1}));
  CHECK(h[0] == ZPolyQ::q_power(1));
  CHECK(h[1] == ZPolyQ(1));
  CHECK(h[2].is_zero());
  // empty board: h_0 = [n]_q!, mass n! at q=1
  std::vector<ZPolyQ> he = hit_algebraic(FerrersBoard({0, 0, 0}));
  CHECK(he[0] == qfact(3));
  CHECK(he[1].is_zero());
  CHECK(he[2].is_zero());
  for (int n = 1; n <= 4; ++n)
    for (const FerrersBoard& b : all_ferrers_boards(n)) {
      BigInt mass = 0;
      for (const ZPolyQ& p : hit_algebraic(b)) mass += p.eval_at_one();
      CHECK(mass == factorial(n));
    }
}

TEST_CASE("torus statistic matches the algebraic definition") {
  for (int n = 1; n <= 4; ++n)
    for (const FerrersBoard& b : subdiagonal_boards(n)) {
      std::vector<ZPolyQ> h = hit_algebraic(b);
      for (int k = 0; k <= n; ++k) CHECK(hit_stat_route(b, k) == h[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("riordan cycle map") {
  RookPlacement p = riordan_map({5, 2, 4, 1, 6, 8, 3, 7});
  std::vector<std::pair<int, int>> expect{{1, 5}, {2, 4}, {3, 6}, {4, 1},
                                          {5, 2}, {6, 8}, {7, 7}, {8, 3}};
  CHECK(p.cells == expect);
  // identity: fixed points on the diagonal
  RookPlacement id = riordan_map({1, 2, 3, 4});
  std::vector<std::pair<int, int>> diag{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK(id.cells == diag);
  // injectivity for n <= 6
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<std::pair<int, int>>> seen;
    long total = 0;
    for_each_perm(n, [&](const std::vector<int>& sigma) {
      seen.insert(riordan_map(sigma).cells);
      ++total;
    });
    CHECK(static_cast<long>(seen.size()) == total);
  }
  // rooks on the reversed path's board count the P-descents
  for (int n = 1; n <= 5; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      FerrersBoard b = board_from_dyck(pi.reversed());
      for_each_perm(n, [&](const std::vector<int>& sigma) {
        RookPlacement L = riordan_map(sigma);
        int on = 0;
        for (const auto& [col, row] : L.cells)
          if (row <= b.height(col)) ++on;
        CHECK(on == static_cast<int>(pdes(pi, sigma).size()));
      });
    }
}

TEST_CASE("pinned hitstat value") {
  DyckPath pi({2, 3, 5, 6, 6, 7, 8, 8});
  CHECK(board_from_dyck(pi) == FerrersBoard({0, 0, 1, 2, 2, 3, 5, 6}));
  CHECK(hitstat(pi, {5, 2, 4, 1, 6, 8, 3, 7}) == 19);
}

TEST_CASE("new hit statistic solves the q-hit problem for B_pi") {
  for (int n = 1; n <= 4; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      std::vector<ZPolyQ> alg = hit_algebraic(board_from_dyck(pi));
      for (int k = 0; k <= n; ++k) CHECK(new_hit_poly(pi, k) == alg[static_cast<std::size_t>(k)]);
    }
  // total mass is n! at q = 1
  DyckPath chain({1, 2, 3, 4});
  BigInt mass = 0;
  for (int k = 0; k <= 4; ++k) mass += new_hit_poly(chain, k).eval_at_one();
  CHECK(mass == factorial(4));
}

TEST_CASE("board reduction") {
  // already below the diagonal: J = 0 and the value multiset is preserved
  FerrersBoard below({0, 1, 1, 3});
  BoardReduction r = board_reduce(below);
  CHECK(r.forced_hits == 0);
  std::multiset<int> vals, vals2;
  for (int i = 1; i <= 4; ++i) {
    vals.insert(below.height(i) - i + 1);
    vals2.insert(r.reduced.height(i) - i + 1);
  }
  CHECK(vals == vals2);
  // full square: n forced hits, empty reduction
  BoardReduction full = board_reduce(FerrersBoard({3, 3, 3}));
  CHECK(full.forced_hits == 3);
  CHECK(full.reduced.cell_count() == 0);
  // contract h_k(B) = h_{k-J}(R) across every board
  for (int n = 1; n <= 4; ++n)
    for (const FerrersBoard& b : all_ferrers_boards(n)) {
      BoardReduction red = board_reduce(b);
      std::vector<ZPolyQ> hb = hit_algebraic(b);
      std::vector<ZPolyQ> hr = hit_algebraic(red.reduced);
      for (int k = 0; k <= n; ++k) {
        ZPolyQ expect;
        if (k >= red.forced_hits) expect = hr[static_cast<std::size_t>(k - red.forced_hits)];
        CHECK(hb[static_cast<std::size_t>(k)] == expect);
      }
    }
}

TEST_CASE("garsia-remmel identity pins the cancellation convention") {
  for (int n = 1; n <= 4; ++n)
    for (const FerrersBoard& b : all_ferrers_boards(n)) {
      // prod_i [alpha + c_i - (i-1)]_q = sum_k r_{n-k}(B;q) [alpha]^(k),
      // checked at alpha = 0..n which pins the degree-n identity
      for (int a = 0; a <= n; ++a) {
        RatQ lhs(1);
        bool zero = false;
        for (int i = 1; i <= n; ++i) {
          int v = a + b.height(i) - (i - 1);
          if (v < 0) {
            // negative q-integer: [v]_q = -q^v [-v]_q
            lhs *= RatQ(-qint(-v).shifted(v));
          } else if (v == 0) {
            zero = true;
          } else {
            lhs *= RatQ(qint(v));
          }
        }
        if (zero) lhs = RatQ();
        RatQ rhs;
        for (int k = 0; k <= n; ++k) {
          ZPolyQ rk = r_poly(b, n - k);
          if (!rk.is_zero()) rhs += RatQ(rk) * falling_formal(k).eval_at_alpha(a);
        }
        CHECK(lhs == rhs);
      }
    }
}
