#include "alphachrom.hpp"

#include "words.hpp"

#include <algorithm>
#include <numeric>

namespace qchrom {

namespace {

// (a,b) precedes (a',b') when a < a', or a = a' and b <_pi b'
bool biletter_prec(const DyckPath& pi, int a, int b, int a2, int b2) {
  if (a != a2) return a < a2;
  return pi.less(b, b2);
}

std::vector<std::vector<int>> color_classes(const std::vector<int>& w) {
  int mx = 0;
  for (int v : w) mx = std::max(mx, v);
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(mx));
  for (std::size_t i = 0; i < w.size(); ++i) cls[static_cast<std::size_t>(w[i] - 1)].push_back(static_cast<int>(i) + 1);
  return cls;
}

} // namespace

int asc_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma) {
  int n = pi.n();
  if (static_cast<int>(w.size()) != n || static_cast<int>(sigma.size()) != n)
    throw std::domain_error("asc_biword: length mismatch");
  int k = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (biletter_prec(pi, w[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i)],
                      w[static_cast<std::size_t>(i + 1)], sigma[static_cast<std::size_t>(i + 1)]))
      ++k;
  return k;
}

int comaj_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma) {
  int n = pi.n();
  int c = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (biletter_prec(pi, w[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i)],
                      w[static_cast<std::size_t>(i + 1)], sigma[static_cast<std::size_t>(i + 1)]))
      c += i + 1;
  return c;
}

int stat_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma) {
  int n = pi.n();
  if (static_cast<int>(w.size()) != n || static_cast<int>(sigma.size()) != n)
    throw std::domain_error("stat_biword: length mismatch");
  int k = 0, comaj = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (biletter_prec(pi, w[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i)],
                      w[static_cast<std::size_t>(i + 1)], sigma[static_cast<std::size_t>(i + 1)])) {
      ++k;
      comaj += i + 1;
    }
  // inv_pi of the vertex-indexed coloring w-tilde, with w~_v = w_{sigma^{-1}(v)}
  std::vector<int> wt(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    int v = sigma[static_cast<std::size_t>(i)];
    wt[static_cast<std::size_t>(v - 1)] = w[static_cast<std::size_t>(i)];
    pos[static_cast<std::size_t>(v)] = i + 1;
  }
  int s = inv_pi(pi, wt);
  // per color class of the vertex coloring, inversions of sigma^{-1} on the
  // induced subgraph: attacking same-color vertex pairs placed out of order
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= pi.h(u); ++v)
      if (wt[static_cast<std::size_t>(u - 1)] == wt[static_cast<std::size_t>(v - 1)] &&
          pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
        ++s;
  return s + n * (n - 1) / 2 - n * k + comaj;
}

AlphaSymFun BiwordExpansion::to_alpha_symfun() const {
  AlphaSymFun out(n, Basis::m);
  for (const auto& [lam, exp] : coeffs) out.add_term(lam, exp.synthesize());
  return out;
}

BiwordExpansion alpha_csf_biword(const DyckPath& pi) {
  int n = pi.n();
  BiwordExpansion out;
  out.n = n;
  int statmax = 3 * n * (n - 1) / 2;
  for (const Partition& lam : partitions(n)) {
    std::vector<std::vector<BigInt>> acc(static_cast<std::size_t>(n),
                                         std::vector<BigInt>(static_cast<std::size_t>(statmax) + 1, BigInt(0)));
    for_each_word(lam, [&](const std::vector<int>& w) {
      for_each_perm(n, [&](const std::vector<int>& sigma) {
        int k = asc_biword(pi, w, sigma);
        int s = stat_biword(pi, w, sigma);
        ++acc[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      });
    });
    AlphaExpansion exp;
    exp.basis = AlphaBasis::QBinomialShift;
    exp.n = n;
    exp.coord.assign(static_cast<std::size_t>(n), RatQ());
    for (int k = 0; k < n; ++k) {
      ZPolyQ c;
      for (int s = 0; s <= statmax; ++s)
        if (acc[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] != 0)
          c.add_term(acc[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)], s);
      exp.coord[static_cast<std::size_t>(k)] = RatQ(std::move(c));
    }
    out.coeffs.emplace(lam, std::move(exp));
  }
  return out;
}

AlphaSymFun alpha_csf_wordproduct(const DyckPath& pi) {
  int n = pi.n();
  ZPolyQ qm1;
  qm1.add_term(1, 1);
  qm1.add_term(-1, 0);
  ZPolyQ den = qm1.pow(n);
  AlphaSymFun out(n, Basis::m);
  for (const Partition& lam : partitions(n)) {
    // accumulate the numerator as a polynomial in t with Laurent coefficients
    std::vector<ZPolyQ> acc(static_cast<std::size_t>(n) + 1);
    for_each_word(lam, [&](const std::vector<int>& w) {
      int shift = inv_pi(pi, w);
      std::vector<ZPolyQ> prod(1, ZPolyQ(1));
      for (const auto& cls : color_classes(w)) {
        DyckPath sub = pi.induced(cls);
        shift += sub.area();
        for (int a : sub.a_vec()) {
          // multiply by (q^{-a} t - 1)
          std::vector<ZPolyQ> next(prod.size() + 1);
          for (std::size_t d = 0; d < prod.size(); ++d) {
            if (prod[d].is_zero()) continue;
            next[d + 1] += prod[d].shifted(-a);
            next[d] -= prod[d];
          }
          prod = std::move(next);
        }
      }
      for (std::size_t d = 0; d < prod.size(); ++d)
        if (!prod[d].is_zero()) acc[d] += prod[d].shifted(shift);
    });
    AlphaElem coeff;
    for (std::size_t d = 0; d < acc.size(); ++d)
      if (!acc[d].is_zero()) coeff.set_coeff(static_cast<int>(d), RatQ(acc[d], den));
    out.add_term(lam, std::move(coeff));
  }
  return out;
}

bool decorated_proper(const DyckPath& pi, const DecoratedColoring& cd) {
  int n = pi.n();
  if (static_cast<int>(cd.colors.size()) != n || static_cast<int>(cd.decorations.size()) != n)
    return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= pi.h(i); ++j)
      if (cd.colors[static_cast<std::size_t>(i - 1)] == cd.colors[static_cast<std::size_t>(j - 1)] &&
          cd.decorations[static_cast<std::size_t>(i - 1)] == cd.decorations[static_cast<std::size_t>(j - 1)])
        return false;
  return true;
}

SymFun alpha_csf_decorated(const DyckPath& pi, int a) {
  if (a < 0) throw std::domain_error("alpha_csf_decorated: negative alpha");
  int n = pi.n();
  SymFun out(n, Basis::m);
  if (a == 0) return out;
  int emax = 3 * n * (n - 1) / 2 + n * (a - 1);
  for (const Partition& lam : partitions(n)) {
    std::vector<BigInt> byexp(static_cast<std::size_t>(emax) + 1, BigInt(0));
    for_each_word(lam, [&](const std::vector<int>& c) {
      int base = inv_pi(pi, c);
      auto classes = color_classes(c);
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
          int e = base;
          bool ok = true;
          for (const auto& cls : classes) {
            for (std::size_t x = 0; x < cls.size() && ok; ++x)
              for (std::size_t y = x + 1; y < cls.size() && ok; ++y) {
                int l = cls[x], m = cls[y];
                if (!pi.attacking(l, m)) continue;
                int dl = d[static_cast<std::size_t>(l - 1)], dm = d[static_cast<std::size_t>(m - 1)];
                if (dl == dm) ok = false;
                if (dl > dm) ++e;
              }
          }
          if (!ok) return;
          for (int v : d) e += v;
          ++byexp[static_cast<std::size_t>(e)];
          return;
        }
        for (int v = 0; v < a; ++v) {
          d[static_cast<std::size_t>(pos)] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    });
    ZPolyQ coeff;
    for (int e = 0; e <= emax; ++e)
      if (byexp[static_cast<std::size_t>(e)] != 0) coeff.add_term(byexp[static_cast<std::size_t>(e)], e);
    if (!coeff.is_zero()) out.add_term(lam, RatQ(std::move(coeff)));
  }
  return out;
}

namespace {

std::vector<int> asc_prefixes(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma) {
  int n = pi.n();
  std::vector<int> pre(static_cast<std::size_t>(n) + 1, 0); // pre[i] = ascents at positions < i (1-based i)
  for (int i = 1; i < n; ++i) {
    pre[static_cast<std::size_t>(i + 1)] =
        pre[static_cast<std::size_t>(i)] +
        (biletter_prec(pi, w[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(i - 1)],
                       w[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i)])
             ? 1
             : 0);
  }
  return pre;
}

} // namespace

DecoratedColoring phi(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma,
                      const std::vector<int>& tau, int alpha) {
  int n = pi.n();
  if (static_cast<int>(w.size()) != n || static_cast<int>(sigma.size()) != n ||
      static_cast<int>(tau.size()) != n)
    throw std::domain_error("phi: length mismatch");
  int k = asc_biword(pi, w, sigma);
  for (int i = 0; i < n; ++i) {
    if (tau[static_cast<std::size_t>(i)] < 0 || tau[static_cast<std::size_t>(i)] > alpha + k - n)
      throw std::domain_error("phi: tau out of range");
    if (i > 0 && tau[static_cast<std::size_t>(i)] < tau[static_cast<std::size_t>(i - 1)])
      throw std::domain_error("phi: tau must be weakly increasing");
  }
  std::vector<int> pre = asc_prefixes(pi, w, sigma);
  DecoratedColoring cd;
  cd.colors.assign(static_cast<std::size_t>(n), 0);
  cd.decorations.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int v = sigma[static_cast<std::size_t>(i - 1)];
    cd.colors[static_cast<std::size_t>(v - 1)] = w[static_cast<std::size_t>(i - 1)];
    cd.decorations[static_cast<std::size_t>(v - 1)] =
        tau[static_cast<std::size_t>(i - 1)] + (i - 1) - pre[static_cast<std::size_t>(i)];
  }
  return cd;
}

std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>
phi_inverse(const DyckPath& pi, const DecoratedColoring& cd, int alpha) {
  int n = pi.n();
  if (!decorated_proper(pi, cd)) throw std::domain_error("phi_inverse: not a proper decorated coloring");
  for (int v : cd.decorations)
    if (v < 0 || v >= alpha) throw std::domain_error("phi_inverse: decoration out of range");
  // colexicographic rank: decorations first, colors second, vertex id last
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    int du = cd.decorations[static_cast<std::size_t>(u - 1)], dv = cd.decorations[static_cast<std::size_t>(v - 1)];
    if (du != dv) return du < dv;
    return cd.colors[static_cast<std::size_t>(u - 1)] < cd.colors[static_cast<std::size_t>(v - 1)];
  });
  std::vector<int> sigma = order;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = cd.colors[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)];
  std::vector<int> pre = asc_prefixes(pi, w, sigma);
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    tau[static_cast<std::size_t>(i - 1)] =
        cd.decorations[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)] - (i - 1) +
        pre[static_cast<std::size_t>(i)];
  return {w, sigma, tau};
}

std::map<int, SymFun> falling_q1(const DyckPath& pi) {
  int n = pi.n();
  std::map<int, SymFun> out;
  std::map<DyckPath, SymFun> cache;
  for (int k = 1; k <= n; ++k) out.emplace(k, SymFun(n, Basis::m));
  for (const SetPartition& s : set_partitions(n)) {
    DyckPath b = beta_setpartition(pi, s);
    auto it = cache.find(b);
    if (it == cache.end()) it = cache.emplace(b, csf_m_q1(b)).first;
    out.at(s.block_count()) += it->second;
  }
  return out;
}

std::map<Partition, std::map<DyckPath, ZPolyQ>> xy_expand(const DyckPath& pi) {
  int n = pi.n();
  std::map<Partition, std::map<DyckPath, ZPolyQ>> out;
  for (const Partition& lam : partitions(n)) {
    auto& row = out[lam];
    for_each_word(lam, [&](const std::vector<int>& w) {
      row[beta_word(pi, w)].add_term(1, inv_pi(pi, w));
    });
  }
  return out;
}

AlphaSymFun alpha_schur_formal(const DyckPath& pi) {
  return alpha_m_to_s(alpha_csf_wordproduct(pi));
}

std::map<Partition, AlphaExpansion> alpha_schur(const DyckPath& pi, AlphaBasis basis) {
  AlphaSymFun s = alpha_schur_formal(pi);
  std::map<Partition, AlphaExpansion> out;
  for (const auto& [lam, coeff] : s.terms()) out.emplace(lam, alpha_to_basis(coeff, basis, pi.n()));
  return out;
}

LltSchurRoutes llt_schur_limit_routes(const DyckPath& pi) {
  int n = pi.n();
  auto qb = alpha_schur(pi, AlphaBasis::QBinomialShift);
  auto fa = alpha_schur(pi, AlphaBasis::FallingFactorial);
  RatQ inv_fact = RatQ(ZPolyQ(1), qfact(n));
  LltSchurRoutes r{SymFun(n, Basis::s), SymFun(n, Basis::s), convert(llt_m(pi), Basis::s)};
  for (const auto& [lam, exp] : qb) {
    // top t-coefficient of [alpha+k over n]_q carries q^{nk - C(n,2)}
    RatQ sum;
    for (std::size_t k = 0; k < exp.coord.size(); ++k)
      sum += exp.coord[k] * RatQ(ZPolyQ::q_power(n * static_cast<int>(k) - n * (n - 1) / 2));
    RatQ divided = sum * inv_fact;
    if (!divided.is_laurent())
      throw std::domain_error("llt_schur_via_limit: coefficient sum not divisible by [n]_q!");
    r.via_qbinom.add_term(lam, divided);
  }
  for (const auto& [lam, exp] : fa) {
    RatQ top = exp.at_k(n) * RatQ(ZPolyQ::q_power(-n * (n - 1) / 2));
    r.via_falling.add_term(lam, top);
  }
  return r;
}

SymFun llt_schur_via_limit(const DyckPath& pi) { return llt_schur_limit_routes(pi).via_qbinom; }

} // namespace qchrom
