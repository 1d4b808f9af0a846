#include "alpha.hpp"
#include "jsonio.hpp"

#include <doctest.h>

#include <random>

using namespace qchrom;

namespace {

ZPolyQ q_minus_1() {
  ZPolyQ p;
  p.add_term(1, 1);
  p.add_term(-1, 0);
  return p;
}

} // namespace

TEST_CASE("qint basics") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == ZPolyQ(1));
  ZPolyQ expect;
  expect.add_term(1, 0);
  expect.add_term(1, 1);
  expect.add_term(1, 2);
  CHECK(qint(3) == expect);
  CHECK_THROWS_AS(qint(-1), std::domain_error);
}

TEST_CASE("ZPolyQ arithmetic and canonical form") {
  ZPolyQ a;
  a.add_term(2, -1);
  a.add_term(3, 2);
  ZPolyQ b;
  b.add_term(-2, -1);
  CHECK((a + b) == ZPolyQ::monomial(3, 2));
  CHECK((a - a).is_zero());
  CHECK(a.min_exp() == -1);
  CHECK(a.max_exp() == 2);
  CHECK((a * ZPolyQ::q_power(5)).min_exp() == 4);
  CHECK(a.subst_q_inverse().subst_q_inverse() == a);
  CHECK(qint(6).subst_q_power(2) == qint(12).divexact(qint(2)));
  CHECK_THROWS_AS(qint(3).divexact(qint(2)), std::domain_error);
  CHECK(qfact(3).eval_at_one() == 6);
  CHECK(qbinom_int(4, 2) == qint(3) * qint(4).divexact(qint(2)));
}

TEST_CASE("exact division handles Laurent operands") {
  ZPolyQ a = qint(4).shifted(-3);
  CHECK(a.divexact(qint(2).shifted(-1)) == qint(4).divexact(qint(2)).shifted(-2));
}

TEST_CASE("RatQ normalization invariants") {
  RatQ half(ZPolyQ(1), ZPolyQ(2));
  CHECK(!half.is_laurent());
  CHECK(half + half == RatQ(1));
  RatQ r(qint(4), qint(2));
  CHECK(r.is_laurent()); // (1+q+q^2+q^3)/(1+q) = 1+q^2
  ZPolyQ expect;
  expect.add_term(1, 0);
  expect.add_term(1, 2);
  CHECK(r.to_zpoly() == expect);
  // denominator q-power moves into the numerator
  RatQ s(ZPolyQ(1), ZPolyQ::q_power(2));
  CHECK(s.is_laurent());
  CHECK(s.to_zpoly() == ZPolyQ::q_power(-2));
  // (a/b)(b/a) = 1
  RatQ a(qint(3), q_minus_1());
  CHECK(a * a.reciprocal() == RatQ(1));
  // negative leading denominators normalize away
  RatQ neg(ZPolyQ(1), ZPolyQ(-2));
  CHECK(neg == RatQ(ZPolyQ(-1), ZPolyQ(2)));
}

TEST_CASE("falling factorial and q-binomial formal elements") {
  CHECK(falling_formal(0) == AlphaElem::one());
  CHECK(falling_formal(1) == alpha_q());
  // [2]_q [1]_q at alpha = 2
  CHECK(falling_formal(2).eval_at_alpha(2).to_zpoly() == qint(2));
  // [2][1][0] = 0 at alpha = 2
  CHECK(falling_formal(3).eval_at_alpha(2).is_zero());
  CHECK(qbinom_formal(0, 1) == alpha_q());
  CHECK(qbinom_formal(0, 2).eval_at_alpha(2).to_zpoly() == ZPolyQ(1));
  CHECK(qbinom_formal(1, 2).eval_at_alpha(2).to_zpoly() == qint(3));
  CHECK(alpha_q().eval_at_alpha(0).is_zero());
  CHECK(alpha_q().eval_at_alpha(3).to_zpoly() == qint(3));
}

TEST_CASE("eval below the falling index vanishes") {
  for (int k = 1; k <= 5; ++k)
    for (int a = 0; a < k; ++a) CHECK(falling_formal(k).eval_at_alpha(a).is_zero());
}

TEST_CASE("alpha_to_basis on [alpha]^2") {
  AlphaElem sq = alpha_q() * alpha_q();
  AlphaExpansion exp = alpha_to_basis(sq, AlphaBasis::FallingFactorial, 2);
  // [alpha]^2 = q [alpha]^(2) + [alpha]^(1)
  CHECK(exp.at_k(1) == RatQ(1));
  CHECK(exp.at_k(2) == RatQ(ZPolyQ::q_power(1)));
  CHECK(exp.integral());
  AlphaExpansion e1 = alpha_to_basis(alpha_q(), AlphaBasis::FallingFactorial, 1);
  CHECK(e1.at_k(1) == RatQ(1));
}

TEST_CASE("non-integral falling coordinates are reported, not hidden") {
  // s_(2)[Q_alpha X] at q=1 carries 1/2 (alpha)^(2) on s_(2); the underlying
  // alpha-element is qbinom(alpha,2)-like with half-integral falling coords
  AlphaElem e = qbinom_formal(0, 2); // [alpha choose 2]
  AlphaExpansion exp = alpha_to_basis(e, AlphaBasis::FallingFactorial, 2);
  CHECK(!exp.integral());
  CHECK(exp.at_k(2) == RatQ(ZPolyQ(1), qfact(2)));
}

TEST_CASE("not-in-span reports the residual") {
  AlphaElem bad = AlphaElem::one(); // does not vanish at t = 1
  CHECK_THROWS_AS(alpha_to_basis(bad, AlphaBasis::FallingFactorial, 3), NotInSpanError);
  try {
    alpha_to_basis(bad, AlphaBasis::FallingFactorial, 3);
  } catch (const NotInSpanError& e) {
    CHECK(!e.residual.is_zero());
  }
}

TEST_CASE("q-Stirling positivity: powers of [alpha] in the falling basis") {
  for (int n = 1; n <= 7; ++n) {
    AlphaElem p = AlphaElem::one();
    for (int i = 0; i < n; ++i) p *= alpha_q();
    AlphaExpansion exp = alpha_to_basis(p, AlphaBasis::FallingFactorial, n);
    INFO("n=", n);
    CHECK(exp.nonneg_integral());
  }
}

TEST_CASE("Vandermonde positivity: qbinom in the alpha-choose basis") {
  // the falling coordinates of [alpha+k over n] are N[q] multiples of 1/[j]!
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k < n; ++k) {
      AlphaExpansion exp = alpha_to_basis(qbinom_formal(k, n), AlphaBasis::FallingFactorial, n);
      for (int j = 1; j <= n; ++j) {
        RatQ scaled = exp.at_k(j) * RatQ(qfact(j));
        INFO("k=", k, " n=", n, " j=", j);
        CHECK(scaled.is_laurent());
        CHECK(scaled.num().nonneg_coeffs());
      }
    }
}

TEST_CASE("basis round-trip on random span elements") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> qexp(-2, 2);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 1 + static_cast<int>(rng() % 7);
    AlphaBasis basis = rng() % 2 ? AlphaBasis::FallingFactorial : AlphaBasis::QBinomialShift;
    AlphaExpansion exp;
    exp.basis = basis;
    exp.n = n;
    for (int i = 0; i < n; ++i)
      exp.coord.push_back(RatQ(ZPolyQ::monomial(coeff(rng), qexp(rng))));
    AlphaElem e = exp.synthesize();
    AlphaExpansion back = alpha_to_basis(e, basis, n);
    CHECK(back.synthesize() == e);
    CHECK(back.coord == exp.coord);
  }
}

TEST_CASE("power sums of Q_alpha specialize correctly") {
  // p_k[Q_a] = 1 + q^k + ... + q^{k(a-1)}
  for (int k = 1; k <= 4; ++k)
    for (int a = 0; a <= 3; ++a) {
      ZPolyQ expect;
      for (int i = 0; i < a; ++i) expect.add_term(1, k * i);
      CHECK(power_sum_Qalpha(k).eval_at_alpha(a).to_zpoly() == expect);
    }
}

TEST_CASE("zpolyq json round trip") {
  ZPolyQ p;
  p.add_term(BigInt("123456789012345678901234567890"), -3);
  p.add_term(-7, 4);
  CHECK(zpoly_from_json(to_json(p)) == p);
  RatQ r(qint(3), q_minus_1() * ZPolyQ(2));
  CHECK(ratq_from_json(to_json(r)) == r);
}
