#include "alphachrom.hpp"

#include "words.hpp"

#include <doctest.h>

#include <set>

using namespace qchrom;

TEST_CASE("ascents of the pinned bi-word table") {
  DyckPath pi({2, 3, 3});
  CHECK(asc_biword(pi, {1, 1, 2}, {1, 3, 2}) == 2);
  CHECK(asc_biword(pi, {2, 1, 1}, {3, 2, 1}) == 0);
  CHECK(asc_biword(pi, {2, 1, 1}, {2, 1, 3}) == 1);
  CHECK(asc_biword(pi, {1, 2, 1}, {1, 2, 3}) == 1);
  CHECK(asc_biword(pi, {1, 1, 2}, {1, 2, 3}) == 1);
  CHECK(comaj_biword(pi, {1, 1, 2}, {1, 3, 2}) == 3);
  // edgeless path, constant word: every position ascends along the chain
  DyckPath chain({1, 2, 3, 4});
  CHECK(asc_biword(chain, {1, 1, 1, 1}, {1, 2, 3, 4}) == 3);
}

TEST_CASE("wordproduct coefficients for the one-edge path") {
  AlphaSymFun f = alpha_csf_wordproduct(DyckPath({2, 2}));
  AlphaElem asq = alpha_q() * alpha_q();
  CHECK(f.coeff(Partition({1, 1})) == asq.scaled(RatQ(qint(2))));
  AlphaElem m2 = f.coeff(Partition({2}));
  // q [alpha][alpha-1]
  AlphaElem expect = (falling_formal(2)).scaled(RatQ(ZPolyQ::q_power(1)));
  CHECK(m2 == expect);
  // n = 1
  AlphaSymFun one = alpha_csf_wordproduct(DyckPath({1}));
  CHECK(one.coeff(Partition({1})) == alpha_q());
}

TEST_CASE("biword route matches wordproduct on small paths") {
  for (int n = 1; n <= 4; ++n)
    for (const DyckPath& pi : all_paths(n))
      CHECK(alpha_csf_biword(pi).to_alpha_symfun() == alpha_csf_wordproduct(pi));
}

TEST_CASE("decorated route is the integer-alpha value") {
  for (int n = 1; n <= 4; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      CHECK(alpha_csf_decorated(pi, 1) == csf_m(pi));
      CHECK(alpha_csf_decorated(pi, 0).is_zero());
      for (int a = 1; a <= 3; ++a)
        CHECK(alpha_csf_wordproduct(pi).eval_at_alpha(a) == alpha_csf_decorated(pi, a));
    }
}

TEST_CASE("phi is a bijection onto decorated proper colorings") {
  DyckPath pi({2, 3, 3});
  int alpha = 2;
  int n = 3;
  std::set<std::pair<std::vector<int>, std::vector<int>>> image;
  long domain = 0;
  for (const Partition& lam : partitions(n)) {
    for (const auto& w : words_of_weight(lam)) {
      for_each_perm(n, [&](const std::vector<int>& sigma) {
        int k = asc_biword(pi, w, sigma);
        int top = alpha + k - n;
        if (top < 0) return;
        std::vector<int> tau(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
          if (pos == n) {
            ++domain;
            DecoratedColoring cd = phi(pi, w, sigma, tau, alpha);
            CHECK(decorated_proper(pi, cd));
            auto [w2, s2, t2] = phi_inverse(pi, cd, alpha);
            CHECK(w2 == w);
            CHECK(s2 == sigma);
            CHECK(t2 == tau);
            image.insert({cd.colors, cd.decorations});
            return;
          }
          for (int v = lo; v <= top; ++v) {
            tau[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
          }
        };
        rec(rec, 0, 0);
      });
    }
  }
  CHECK(static_cast<long>(image.size()) == domain);
  // count decorated proper colorings directly
  long direct = 0;
  std::vector<int> c(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 2 * n) {
      // weight must be a partition: letter multiplicities weakly decreasing
      std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
      for (int v : c) ++mult[static_cast<std::size_t>(v)];
      for (int v = 2; v <= n; ++v)
        if (mult[static_cast<std::size_t>(v)] > mult[static_cast<std::size_t>(v - 1)]) return;
      DecoratedColoring cd{c, d};
      if (decorated_proper(pi, cd)) ++direct;
      return;
    }
    if (pos < n) {
      for (int v = 1; v <= n; ++v) {
        c[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1);
      }
    } else {
      for (int v = 0; v < alpha; ++v) {
        d[static_cast<std::size_t>(pos - n)] = v;
        self(self, pos + 1);
      }
    }
  };
  rec(rec, 0);
  CHECK(direct == static_cast<long>(image.size()));
}

TEST_CASE("phi with zero tau gives staircase-minus-ascent decorations") {
  DyckPath pi({2, 3, 3});
  std::vector<int> w{1, 1, 2};
  std::vector<int> sigma{1, 2, 3};
  std::vector<int> tau(3, 0);
  DecoratedColoring cd = phi(pi, w, sigma, tau, 3);
  // direct check against the defining formula
  std::vector<int> pre(4, 0);
  for (int i = 1; i < 3; ++i) {
    bool asc = false;
    if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)]) asc = true;
    if (w[static_cast<std::size_t>(i - 1)] == w[static_cast<std::size_t>(i)] &&
        pi.less(sigma[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(i)]))
      asc = true;
    pre[static_cast<std::size_t>(i + 1)] = pre[static_cast<std::size_t>(i)] + (asc ? 1 : 0);
  }
  for (int i = 1; i <= 3; ++i) {
    int v = sigma[static_cast<std::size_t>(i - 1)];
    CHECK(cd.decorations[static_cast<std::size_t>(v - 1)] == (i - 1) - pre[static_cast<std::size_t>(i)]);
  }
  CHECK_THROWS_AS(phi(pi, w, sigma, {0, 0, 5}, 3), std::domain_error);
  CHECK_THROWS_AS(phi(pi, w, sigma, {1, 0, 0}, 3), std::domain_error);
}

TEST_CASE("falling expansion at q=1 for the running example") {
  DyckPath pi({2, 3, 3});
  std::map<int, SymFun> f = falling_q1(pi);
  CHECK(f.at(1) == csf_m_q1(pi));
  SymFun k2 = csf_m_q1(DyckPath({1, 3, 3}));
  k2 += csf_m_q1(DyckPath({1, 2, 3}));
  k2 += csf_m_q1(DyckPath({2, 2, 3}));
  CHECK(f.at(2) == k2);
  CHECK(f.at(3) == csf_m_q1(DyckPath({1, 2, 3})));
}

TEST_CASE("xy rows for extreme contents") {
  for (int n = 2; n <= 4; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      auto rows = xy_expand(pi);
      // constant word: beta = pi with weight 1
      const auto& full = rows.at(Partition({n}));
      CHECK(full.size() == 1);
      CHECK(full.begin()->first == pi);
      CHECK(full.begin()->second == ZPolyQ(1));
      // all-distinct colors: the edgeless path collects everything
      const auto& ones = rows.at(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      CHECK(ones.size() == 1);
      std::vector<int> chain(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) chain[static_cast<std::size_t>(i)] = i + 1;
      CHECK(ones.begin()->first == DyckPath(chain));
      CHECK(ones.begin()->second.eval_at_one() == factorial(n));
    }
}

TEST_CASE("alpha schur expansions of tiny paths") {
  auto one = alpha_schur(DyckPath({1}), AlphaBasis::QBinomialShift);
  CHECK(one.at(Partition({1})).at_k(0) == RatQ(1));
  auto onef = alpha_schur(DyckPath({1}), AlphaBasis::FallingFactorial);
  CHECK(onef.at(Partition({1})).at_k(1) == RatQ(1));
  // one-edge path: coefficients positive in the qbinom basis
  for (const auto& [lam, exp] : alpha_schur(DyckPath({2, 2}), AlphaBasis::QBinomialShift))
    CHECK(exp.nonneg_integral());
}

TEST_CASE("llt schur recovery routes agree on small paths") {
  for (int n = 1; n <= 4; ++n)
    for (const DyckPath& pi : all_paths(n)) {
      LltSchurRoutes r = llt_schur_limit_routes(pi);
      CHECK(r.via_qbinom == r.direct);
      CHECK(r.via_falling == r.direct);
    }
  CHECK(llt_schur_via_limit(DyckPath({1})) == SymFun::basis_elem(Basis::s, Partition({1})));
}
