#include "chromatic.hpp"

#include "words.hpp"

#include <algorithm>

namespace qchrom {

int inv_pi(const DyckPath& pi, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi.n()) throw std::domain_error("inv_pi: word length mismatch");
  int inv = 0;
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = i + 1; j <= pi.h(i); ++j)
      if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)]) ++inv;
  return inv;
}

int asc_pi_word(const DyckPath& pi, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi.n()) throw std::domain_error("asc_pi_word: word length mismatch");
  int asc = 0;
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = i + 1; j <= pi.h(i); ++j)
      if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(j - 1)]) ++asc;
  return asc;
}

namespace {

bool proper(const DyckPath& pi, const std::vector<int>& w) {
  for (int i = 1; i <= pi.n(); ++i)
    for (int j = i + 1; j <= pi.h(i); ++j)
      if (w[static_cast<std::size_t>(i - 1)] == w[static_cast<std::size_t>(j - 1)]) return false;
  return true;
}

SymFun coloring_sum(const DyckPath& pi, bool require_proper) {
  int n = pi.n();
  SymFun out(n, Basis::m);
  int maxinv = n * (n - 1) / 2;
  for (const Partition& lam : partitions(n)) {
    std::vector<BigInt> byinv(static_cast<std::size_t>(maxinv) + 1, BigInt(0));
    for_each_word(lam, [&](const std::vector<int>& w) {
      if (require_proper && !proper(pi, w)) return;
      ++byinv[static_cast<std::size_t>(inv_pi(pi, w))];
    });
    ZPolyQ c;
    for (int e = 0; e <= maxinv; ++e)
      if (byinv[static_cast<std::size_t>(e)] != 0) c.add_term(byinv[static_cast<std::size_t>(e)], e);
    if (!c.is_zero()) out.add_term(lam, RatQ(std::move(c)));
  }
  return out;
}

} // namespace

SymFun csf_m(const DyckPath& pi) { return coloring_sum(pi, true); }
SymFun llt_m(const DyckPath& pi) { return coloring_sum(pi, false); }

SymFun csf_m_q1(const DyckPath& pi) {
  int n = pi.n();
  SymFun out(n, Basis::m);
  for (const Partition& lam : partitions(n)) {
    BigInt count = 0;
    for_each_word(lam, [&](const std::vector<int>& w) {
      if (proper(pi, w)) ++count;
    });
    if (count != 0) out.add_term(lam, RatQ(ZPolyQ(count)));
  }
  return out;
}

std::vector<int> pdes(const DyckPath& pi, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != pi.n()) throw std::domain_error("pdes: length mismatch");
  std::vector<int> d;
  for (int i = 1; i < pi.n(); ++i)
    if (pi.less(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i - 1)])) d.push_back(i);
  return d;
}

FExpansion f_expansion(const DyckPath& pi) {
  FExpansion fe;
  fe.n = pi.n();
  for_each_perm(pi.n(), [&](const std::vector<int>& sigma) {
    FTriple t;
    t.sigma = sigma;
    t.exponent = inv_pi(pi, inverse_perm(sigma));
    t.pdes = pdes(pi, sigma);
    fe.triples.push_back(std::move(t));
  });
  return fe;
}

SymFun f_to_m(const FExpansion& fe) {
  int n = fe.n;
  SymFun out(n, Basis::m);
  for (const Partition& lam : partitions(n)) {
    // the dominant monomial of F_{n,D} survives iff the forced strict rises
    // sit at block boundaries of 1^{l1} 2^{l2} ...
    std::vector<bool> boundary(static_cast<std::size_t>(n), false);
    int acc = 0;
    for (int i = 0; i < lam.length(); ++i) {
      acc += lam.part(i);
      if (acc < n) boundary[static_cast<std::size_t>(acc)] = true;
    }
    ZPolyQ c;
    for (const FTriple& t : fe.triples) {
      // D = complement of pdes in [n-1]
      std::vector<bool> is_pdes(static_cast<std::size_t>(n), false);
      for (int i : t.pdes) is_pdes[static_cast<std::size_t>(i)] = true;
      bool ok = true;
      for (int i = 1; i < n && ok; ++i)
        if (!is_pdes[static_cast<std::size_t>(i)] && !boundary[static_cast<std::size_t>(i)]) ok = false;
      if (ok) c.add_term(1, t.exponent);
    }
    if (!c.is_zero()) out.add_term(lam, RatQ(std::move(c)));
  }
  return out;
}

std::vector<ModularTriple> modular_triples(int n) {
  std::vector<ModularTriple> out;
  for (const DyckPath& p1 : all_paths(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      int prev = i == 1 ? 0 : p1.h(i - 1);
      // first type: strict rise through column i, flat at height h(i)
      if (prev < p1.h(i) && p1.h(i) < p1.h(i + 1)) {
        int v = p1.h(i);
        if (v == n || (v + 1 <= n && p1.h(v) == p1.h(v + 1))) {
          std::vector<int> h0 = p1.heights(), h2 = p1.heights();
          h0[static_cast<std::size_t>(i - 1)] = v - 1;
          h2[static_cast<std::size_t>(i - 1)] = v + 1;
          out.push_back({DyckPath(std::move(h0)), p1, DyckPath(std::move(h2)), i, 1});
        }
      }
      // second type: unit step at i and no column of height i
      if (p1.h(i + 1) == p1.h(i) + 1) {
        bool has_i = false;
        for (int j = 1; j <= n; ++j)
          if (p1.h(j) == i) has_i = true;
        if (!has_i) {
          std::vector<int> h0 = p1.heights(), h2 = p1.heights();
          h0[static_cast<std::size_t>(i - 1)] = p1.h(i);
          h0[static_cast<std::size_t>(i)] = p1.h(i);
          h2[static_cast<std::size_t>(i - 1)] = p1.h(i + 1);
          h2[static_cast<std::size_t>(i)] = p1.h(i + 1);
          out.push_back({DyckPath(std::move(h0)), p1, DyckPath(std::move(h2)), i, 2});
        }
      }
    }
  }
  return out;
}

} // namespace qchrom
