#include "verify.hpp"

#include "alphachrom.hpp"
#include "jsonio.hpp"
#include "parallel.hpp"
#include "rook.hpp"
#include "words.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace qchrom {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string witness;
};

Outcome ok() { return {}; }
Outcome fail(std::string w) { return {false, std::move(w)}; }

struct Runner {
  const VerifyOptions& opts;
  SuiteReport rep;

  explicit Runner(const VerifyOptions& o, std::string suite, int max_n) : opts(o) {
    rep.suite = std::move(suite);
    rep.max_n = max_n;
    rep.seed = o.seed;
  }

  bool wanted(const std::string& name) const {
    return opts.filter.empty() || name.find(opts.filter) != std::string::npos;
  }

  void check(const std::string& name, const std::function<Outcome()>& fn, bool conjecture = false) {
    if (!wanted(name)) return;
    CheckResult r;
    r.name = name;
    r.conjecture = conjecture;
    auto t0 = Clock::now();
    try {
      Outcome o = fn();
      r.pass = o.pass;
      r.witness = o.witness;
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = ms_since(t0);
    rep.checks.push_back(std::move(r));
  }
};

std::map<Partition, BigInt> symfun_q1(const SymFun& f) {
  std::map<Partition, BigInt> out;
  for (const auto& [lam, c] : f.terms()) {
    const ZPolyQ& p = c.to_zpoly();
    BigInt v = p.eval_at_one();
    if (v != 0) out[lam] = v;
  }
  return out;
}

BigInt falling_int(long a, int k) {
  BigInt r = 1;
  for (int j = 0; j < k; ++j) r *= (a - j);
  return r;
}

AlphaElem q_power_times_product(int qshift, const std::vector<int>& subtracted) {
  // q^{qshift} * prod_j [alpha - subtracted_j]_q
  AlphaElem r = AlphaElem::one().scaled(RatQ(ZPolyQ::q_power(qshift)));
  ZPolyQ qm1;
  qm1.add_term(1, 1);
  qm1.add_term(-1, 0);
  for (int a : subtracted) {
    AlphaElem f;
    f.set_coeff(1, RatQ(ZPolyQ::q_power(-a), qm1));
    f.set_coeff(0, RatQ(ZPolyQ(-1), qm1));
    r *= f;
  }
  return r;
}

AlphaElem rook_product_formal(const std::vector<int>& heights) {
  // prod_i [alpha + c_i - (i-1)]_q
  std::vector<int> sub;
  for (std::size_t i = 0; i < heights.size(); ++i)
    sub.push_back(static_cast<int>(i) - heights[i]); // alpha - (i-1-c_i)
  return q_power_times_product(0, sub);
}

std::string path_witness(const DyckPath& pi) { return "path=" + pi.to_string(); }

std::vector<ZPolyQ> new_hit_all(const DyckPath& pi) {
  int n = pi.n();
  std::vector<ZPolyQ> raw(static_cast<std::size_t>(n) + 1);
  for_each_perm(n, [&](const std::vector<int>& sigma) {
    raw[pdes(pi, sigma).size()].add_term(1, hitstat(pi, sigma));
  });
  for (auto& p : raw) p = p.shifted(-pi.area());
  return raw;
}

// ---------------------------------------------------------------- suites

void suite_prop2_6(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("principal-product n=" + std::to_string(n), [n]() {
      for (const DyckPath& pi : all_paths(n)) {
        AlphaElem lhs = principal_spec_formal(csf_m(pi));
        AlphaElem via_a = q_power_times_product(pi.area(), pi.a_vec());
        AlphaElem via_b = q_power_times_product(pi.area(), pi.b_vec());
        if (lhs != via_a || lhs != via_b) return fail(path_witness(pi));
      }
      return ok();
    });
  }
  // chi_pi[Q_alpha;q] = q^{area} PR(B_pi); the bare rook product is off by the area power
  r.check("rook-product-bridge n<=" + std::to_string(r.rep.max_n), [&r]() {
    for (int n = 1; n <= r.rep.max_n; ++n)
      for (const DyckPath& pi : all_paths(n)) {
        AlphaElem lhs = principal_spec_formal(csf_m(pi));
        AlphaElem pr = rook_product_formal(board_from_dyck(pi).heights());
        if (lhs != pr.scaled(RatQ(ZPolyQ::q_power(pi.area())))) return fail(path_witness(pi));
      }
    return ok();
  });
}

void suite_thm3_1(Runner& r) {
  r.check("pinned-binomial-coords", []() {
    DyckPath pi({2, 3, 3});
    BiwordExpansion be = alpha_csf_biword(pi);
    auto coords_q1 = [&](const Partition& lam) {
      std::vector<BigInt> v;
      for (const RatQ& c : be.coeffs.at(lam).coord) v.push_back(c.to_zpoly().eval_at_one());
      return v;
    };
    std::vector<BigInt> m111 = coords_q1(Partition({1, 1, 1}));
    std::vector<BigInt> m21 = coords_q1(Partition({2, 1}));
    std::vector<BigInt> m3 = coords_q1(Partition({3}));
    if (m111 != std::vector<BigInt>{6, 24, 6}) return fail("m111 coords off");
    if (m21 != std::vector<BigInt>{5, 12, 1}) return fail("m21 coords off");
    if (m3 != std::vector<BigInt>{4, 2, 0}) return fail("m3 coords off");
    return ok();
  });
  int route_cap = r.opts.big_biword ? r.rep.max_n : std::min(r.rep.max_n, 5);
  for (int n = 1; n <= route_cap; ++n) {
    r.check("three-route-formal n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [](const DyckPath& pi) -> std::string {
        if (alpha_csf_biword(pi).to_alpha_symfun() != alpha_csf_wordproduct(pi))
          return pi.to_string();
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
    for (int a = 1; a <= 3; ++a) {
      r.check("three-route-decorated n=" + std::to_string(n) + " alpha=" + std::to_string(a),
              [n, a, &r]() {
                std::vector<DyckPath> paths = all_paths(n);
                std::function<std::string(const DyckPath&)> one = [a](const DyckPath& pi) -> std::string {
                  if (alpha_csf_wordproduct(pi).eval_at_alpha(a) != alpha_csf_decorated(pi, a))
                    return pi.to_string();
                  return "";
                };
                for (const std::string& w : parallel_map(paths, one, r.opts.workers))
                  if (!w.empty()) return fail("path=" + w);
                return ok();
              });
    }
  }
}

void suite_thm4_2(Runner& r) {
  r.check("pinned-falling-parts", []() {
    DyckPath pi({2, 3, 3});
    std::map<int, SymFun> got = falling_q1(pi);
    SymFun k1 = csf_m_q1(DyckPath({2, 3, 3}));
    SymFun k2 = csf_m_q1(DyckPath({1, 3, 3}));
    k2 += csf_m_q1(DyckPath({1, 2, 3}));
    k2 += csf_m_q1(DyckPath({2, 2, 3}));
    SymFun k3 = csf_m_q1(DyckPath({1, 2, 3}));
    if (got.at(1) != k1 || got.at(2) != k2 || got.at(3) != k3) return fail("expansion mismatch");
    return ok();
  });
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("falling-reassembly n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        std::map<int, SymFun> fq = falling_q1(pi);
        AlphaSymFun wp = alpha_csf_wordproduct(pi);
        for (int a = 0; a <= n; ++a) {
          std::map<Partition, BigInt> lhs = symfun_q1(wp.eval_at_alpha(a));
          std::map<Partition, BigInt> rhs;
          for (const auto& [k, f] : fq) {
            BigInt fac = falling_int(a, k);
            if (fac == 0) continue;
            for (const auto& [lam, c] : symfun_q1(f)) {
              rhs[lam] += fac * c;
              if (rhs[lam] == 0) rhs.erase(lam);
            }
          }
          if (lhs != rhs) return pi.to_string() + " alpha=" + std::to_string(a);
        }
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_gr_identity(Runner& r) {
  r.check("pinned-inv-8", []() {
    FerrersBoard b({2, 3, 5, 5, 5, 6});
    RookPlacement p{6, {{2, 3}, {3, 2}, {4, 4}, {5, 1}}};
    int v = inv_B(b, p);
    return v == 8 ? ok() : fail("inv=" + std::to_string(v));
  });
  int cap = std::min(r.rep.max_n, 5);
  for (int n = 1; n <= cap; ++n) {
    r.check("garsia-remmel n=" + std::to_string(n), [n]() {
      for (const FerrersBoard& b : all_ferrers_boards(n)) {
        AlphaElem lhs = rook_product_formal(b.heights());
        AlphaElem rhs;
        for (int k = 0; k <= n; ++k) {
          ZPolyQ rk = r_poly(b, n - k);
          if (!rk.is_zero()) rhs += falling_formal(k).scaled(RatQ(rk));
        }
        if (lhs != rhs) return fail("board=" + b.to_string());
      }
      return ok();
    });
    r.check("dworkin-qbinom n=" + std::to_string(n), [n]() {
      for (const FerrersBoard& b : all_ferrers_boards(n)) {
        AlphaElem lhs = rook_product_formal(b.heights());
        AlphaElem rhs;
        std::vector<ZPolyQ> h = hit_algebraic(b);
        for (int k = 0; k <= n; ++k)
          if (k < static_cast<int>(h.size()) && !h[static_cast<std::size_t>(k)].is_zero())
            rhs += qbinom_formal(k, n).scaled(RatQ(h[static_cast<std::size_t>(k)]));
        if (lhs != rhs) return fail("board=" + b.to_string());
      }
      return ok();
    });
    r.check("value-multiset n=" + std::to_string(n), [n]() {
      std::map<std::vector<int>, std::pair<FerrersBoard, std::vector<ZPolyQ>>> seen;
      for (const FerrersBoard& b : all_ferrers_boards(n)) {
        std::vector<int> key(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) key[static_cast<std::size_t>(i - 1)] = b.height(i) - i + 1;
        std::sort(key.begin(), key.end());
        std::vector<ZPolyQ> rk;
        for (int k = 0; k <= n; ++k) rk.push_back(r_poly(b, k));
        auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(key, std::make_pair(b, std::move(rk)));
        } else if (it->second.second != rk) {
          return fail("boards " + it->second.first.to_string() + " vs " + b.to_string());
        }
      }
      return ok();
    });
  }
}

void suite_gjw(Runner& r) {
  int cap = std::min(r.rep.max_n, 5);
  for (int n = 1; n <= cap; ++n) {
    r.check("gjw-q1 n=" + std::to_string(n), [n]() {
      for (const FerrersBoard& b : all_ferrers_boards(n)) {
        // integer identity prod (a + c_i - (i-1)) = sum r_{n-k}(B) (a)_k at a = 0..n
        for (long a = 0; a <= n; ++a) {
          BigInt lhs = 1;
          for (int i = 1; i <= n; ++i) lhs *= BigInt(a + b.height(i) - (i - 1));
          BigInt rhs = 0;
          for (int k = 0; k <= n; ++k) rhs += r_poly(b, n - k).eval_at_one() * falling_int(a, k);
          if (lhs != rhs) return fail("board=" + b.to_string() + " a=" + std::to_string(a));
        }
      }
      return ok();
    });
  }
}

void suite_f_expansion(Runner& r) {
  r.check("pinned-pdes-and-inv", []() {
    DyckPath pi({2, 3, 5, 6, 6, 7, 8, 8});
    if (!(board_from_dyck(pi) == FerrersBoard({0, 0, 1, 2, 2, 3, 5, 6})))
      return fail("board/path correspondence broken");
    std::vector<int> sigma{5, 2, 4, 1, 6, 8, 3, 7};
    std::vector<int> d = pdes(pi, sigma);
    if (d != std::vector<int>{1, 3, 6}) return fail("pdes mismatch");
    int inv = inv_pi(pi, inverse_perm(sigma));
    if (inv != 5) return fail("inv=" + std::to_string(inv));
    return ok();
  });
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("f-reconstruction n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [](const DyckPath& pi) -> std::string {
        return f_to_m(f_expansion(pi)) == csf_m(pi) ? "" : pi.to_string();
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_qhit(Runner& r) {
  r.check("pinned-torus-stat-10", []() {
    FerrersBoard b({0, 1, 3, 4, 4, 4});
    RookPlacement p{6, {{1, 2}, {2, 4}, {3, 1}, {4, 5}, {5, 3}, {6, 6}}};
    int v = haglund_stat(b, p);
    return v == 10 ? ok() : fail("stat=" + std::to_string(v));
  });
  r.check("pinned-hitstat-19", []() {
    DyckPath pi({2, 3, 5, 6, 6, 7, 8, 8});
    int v = hitstat(pi, {5, 2, 4, 1, 6, 8, 3, 7});
    return v == 19 ? ok() : fail("hitstat=" + std::to_string(v));
  });
  int board_cap = std::min(r.rep.max_n, 5);
  for (int n = 1; n <= board_cap; ++n) {
    r.check("torus-vs-algebraic n=" + std::to_string(n), [n]() {
      for (const FerrersBoard& b : subdiagonal_boards(n)) {
        std::vector<ZPolyQ> h = hit_algebraic(b);
        for (int k = 0; k <= n; ++k)
          if (hit_stat_route(b, k) != h[static_cast<std::size_t>(k)])
            return fail("board=" + b.to_string() + " k=" + std::to_string(k));
      }
      return ok();
    });
    r.check("board-reduce n=" + std::to_string(n), [n]() {
      for (const FerrersBoard& b : all_ferrers_boards(n)) {
        BoardReduction red = board_reduce(b);
        std::vector<ZPolyQ> hb = hit_algebraic(b);
        std::vector<ZPolyQ> hr = hit_algebraic(red.reduced);
        for (int k = 0; k <= n; ++k) {
          ZPolyQ expect = k - red.forced_hits >= 0 && k - red.forced_hits <= n
                              ? hr[static_cast<std::size_t>(k - red.forced_hits)]
                              : ZPolyQ();
          if (hb[static_cast<std::size_t>(k)] != expect)
            return fail("board=" + b.to_string() + " k=" + std::to_string(k));
        }
      }
      return ok();
    });
    r.check("riordan n=" + std::to_string(n), [n]() {
      std::vector<std::vector<std::pair<int, int>>> images;
      bool prop = true;
      std::string w;
      std::vector<DyckPath> paths = all_paths(n);
      for_each_perm(n, [&](const std::vector<int>& sigma) {
        if (!prop) return;
        RookPlacement L = riordan_map(sigma);
        images.push_back(L.cells);
        for (const DyckPath& pi : paths) {
          FerrersBoard b = board_from_dyck(pi.reversed());
          int on = 0;
          for (const auto& [col, row] : L.cells)
            if (row <= b.height(col)) ++on;
          if (on != static_cast<int>(pdes(pi, sigma).size())) {
            prop = false;
            std::ostringstream os;
            os << "sigma=";
            for (int v : sigma) os << v;
            os << " path=" << pi.to_string();
            w = os.str();
            return;
          }
        }
      });
      if (!prop) return fail(w);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return fail("riordan map not injective");
      return ok();
    });
  }
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("new-hit-vs-algebraic n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        std::vector<ZPolyQ> mine = new_hit_all(pi);
        std::vector<ZPolyQ> alg = hit_algebraic(board_from_dyck(pi));
        for (int k = 0; k <= n; ++k)
          if (mine[static_cast<std::size_t>(k)] != alg[static_cast<std::size_t>(k)])
            return pi.to_string() + " k=" + std::to_string(k);
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
    r.check("pdes-binomial-expansion n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        std::vector<ZPolyQ> raw = new_hit_all(pi); // already shifted by -area
        AlphaElem rhs;
        for (int k = 0; k <= n; ++k)
          if (k < n && !raw[static_cast<std::size_t>(k)].is_zero())
            rhs += qbinom_formal(k, n).scaled(
                RatQ(raw[static_cast<std::size_t>(k)].shifted(pi.area())));
        if (!raw[static_cast<std::size_t>(n)].is_zero()) return pi.to_string() + " PDes=n impossible";
        AlphaElem lhs = principal_spec_formal(csf_m(pi));
        return lhs == rhs ? "" : pi.to_string();
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_schur_qbinom(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("csf-schur-positivity n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [](const DyckPath& pi) -> std::string {
        return convert(csf_m(pi), Basis::s).schur_positive_coeffs() ? "" : pi.to_string();
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
    r.check("qbinom-positivity n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        for (const auto& [lam, exp] : alpha_schur(pi, AlphaBasis::QBinomialShift))
          if (!exp.nonneg_integral()) return pi.to_string() + " lambda=" + lam.to_string();
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
  int int_cap = std::min(r.rep.max_n, 5);
  for (int n = 1; n <= int_cap; ++n)
    for (int a = 1; a <= 3; ++a) {
      r.check("integer-alpha-positivity n=" + std::to_string(n) + " alpha=" + std::to_string(a),
              [n, a, &r]() {
                std::vector<DyckPath> paths = all_paths(n);
                std::function<std::string(const DyckPath&)> one = [a](const DyckPath& pi) -> std::string {
                  SymFun s = convert(alpha_csf_decorated(pi, a), Basis::s);
                  return s.schur_positive_coeffs() ? "" : pi.to_string();
                };
                for (const std::string& w : parallel_map(paths, one, r.opts.workers))
                  if (!w.empty()) return fail("path=" + w);
                return ok();
              });
    }
}

void suite_conj5_3(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check(
        "falling-integrality n=" + std::to_string(n),
        [n, &r]() {
          std::vector<DyckPath> paths = all_paths(n);
          std::function<std::string(const DyckPath&)> one = [](const DyckPath& pi) -> std::string {
            for (const auto& [lam, exp] : alpha_schur(pi, AlphaBasis::FallingFactorial)) {
              if (!exp.nonneg_integral()) {
                std::string coords;
                for (std::size_t i = 0; i < exp.coord.size(); ++i)
                  coords += " k=" + std::to_string(static_cast<int>(i) + exp.k_offset()) + ": " +
                            exp.coord[i].to_string();
                return "COUNTEREXAMPLE path=" + pi.to_string() + " lambda=" + lam.to_string() + coords;
              }
            }
            return "";
          };
          for (const std::string& w : parallel_map(paths, one, r.opts.workers))
            if (!w.empty()) return fail(w);
          return ok();
        },
        /*conjecture=*/true);
  }
}

void suite_symmetry5_6(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("schur-symmetry n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        auto exp = alpha_schur(pi, AlphaBasis::QBinomialShift);
        int shift = pi.area() + n * (n - 1) / 2;
        for (const Partition& lam : partitions(n)) {
          Partition conj = lam.conjugate();
          for (int k = 0; k < n; ++k) {
            ZPolyQ c = exp.count(lam) ? exp.at(lam).at_k(k).to_zpoly() : ZPolyQ();
            ZPolyQ other =
                exp.count(conj) ? exp.at(conj).at_k(n - 1 - k).to_zpoly() : ZPolyQ();
            if (c != other.subst_q_inverse().shifted(shift))
              return pi.to_string() + " lambda=" + lam.to_string() + " k=" + std::to_string(k);
          }
        }
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_llt_limit(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("llt-limit n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [](const DyckPath& pi) -> std::string {
        LltSchurRoutes routes = llt_schur_limit_routes(pi);
        if (routes.via_qbinom != routes.direct || routes.via_falling != routes.direct)
          return pi.to_string();
        return "";
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_hikita(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("hikita n=" + std::to_string(n), [n, &r]() {
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one = [n](const DyckPath& pi) -> std::string {
        SymFun ce = convert(csf_m(pi), Basis::e);
        int cells_above = n * (n - 1) / 2 - pi.area();
        RatQ total;
        for (const auto& [lam, c] : ce.terms()) {
          int elam = 0;
          for (int i = 0; i < lam.length(); ++i)
            for (int j = i + 1; j < lam.length(); ++j) elam += lam.part(i) * lam.part(j);
          ZPolyQ denom(1);
          for (int part : lam.parts()) denom *= qfact(part);
          total += c * RatQ(ZPolyQ::q_power(cells_above - elam), denom);
        }
        return total.is_one() ? "" : pi.to_string();
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
  }
}

void suite_modular_law(Runner& r) {
  for (int n = 2; n <= r.rep.max_n; ++n) {
    r.check("modular-csf-llt n=" + std::to_string(n), [n]() {
      std::map<DyckPath, std::pair<std::map<Partition, BigInt>, std::map<Partition, BigInt>>> cache;
      auto get = [&](const DyckPath& p) -> const auto& {
        auto it = cache.find(p);
        if (it == cache.end())
          it = cache.emplace(p, std::make_pair(symfun_q1(csf_m(p)), symfun_q1(llt_m(p)))).first;
        return it->second;
      };
      for (const ModularTriple& t : modular_triples(n)) {
        const auto& f0 = get(t.pi0);
        const auto& f1 = get(t.pi1);
        const auto& f2 = get(t.pi2);
        for (int part = 0; part < 2; ++part) {
          const auto& m0 = part == 0 ? f0.first : f0.second;
          const auto& m1 = part == 0 ? f1.first : f1.second;
          const auto& m2 = part == 0 ? f2.first : f2.second;
          std::map<Partition, BigInt> lhs, rhs;
          for (const auto& [l, c] : m1) lhs[l] = 2 * c;
          rhs = m0;
          for (const auto& [l, c] : m2) {
            rhs[l] += c;
            if (rhs[l] == 0) rhs.erase(l);
          }
          if (lhs != rhs)
            return fail("triple pi1=" + t.pi1.to_string() + " i=" + std::to_string(t.position) +
                        (part == 0 ? " csf" : " llt"));
        }
      }
      return ok();
    });
  }
  int alpha_cap = std::min(r.rep.max_n, 5);
  for (int n = 2; n <= alpha_cap; ++n)
    for (int a = 1; a <= 3; ++a) {
      r.check("modular-alpha n=" + std::to_string(n) + " alpha=" + std::to_string(a), [n, a]() {
        std::map<DyckPath, std::map<Partition, BigInt>> cache;
        auto get = [&](const DyckPath& p) -> const std::map<Partition, BigInt>& {
          auto it = cache.find(p);
          if (it == cache.end()) it = cache.emplace(p, symfun_q1(alpha_csf_decorated(p, a))).first;
          return it->second;
        };
        for (const ModularTriple& t : modular_triples(n)) {
          std::map<Partition, BigInt> lhs, rhs;
          for (const auto& [l, c] : get(t.pi1)) lhs[l] = 2 * c;
          rhs = get(t.pi0);
          for (const auto& [l, c] : get(t.pi2)) {
            rhs[l] += c;
            if (rhs[l] == 0) rhs.erase(l);
          }
          if (lhs != rhs)
            return fail("triple pi1=" + t.pi1.to_string() + " i=" + std::to_string(t.position));
        }
        return ok();
      });
    }
}

void suite_complete_graph(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("complete-graph-charge n=" + std::to_string(n), [n]() {
      DyckPath pi(std::vector<int>(static_cast<std::size_t>(n), n));
      AlphaSymFun lhs = alpha_schur_formal(pi);
      for (const Partition& lam : partitions(n)) {
        AlphaElem expect;
        for (const Tableau& t : syt(lam)) {
          std::vector<int> contents;
          for (int row = 0; row < lam.length(); ++row)
            for (int col = 0; col < lam.part(row); ++col) contents.push_back(col - row);
          expect += q_power_times_product(charge(t), contents);
        }
        if (lhs.coeff(lam) != expect) return fail("lambda=" + lam.to_string());
      }
      return ok();
    });
  }
}

void suite_schur_spec(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("schur-spec n=" + std::to_string(n), [n]() {
      for (const Partition& lam : partitions(n)) {
        if (schur_spec_syt(lam) != principal_spec_formal(SymFun::basis_elem(Basis::s, lam)))
          return fail("lambda=" + lam.to_string());
      }
      return ok();
    });
  }
}

void suite_kronecker_id(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n)
    for (int a = 1; a <= 3; ++a) {
      r.check("kronecker-identity n=" + std::to_string(n) + " alpha=" + std::to_string(a), [n, a]() {
        SymFun hq = h_n_QaX(n, a);
        for (const Partition& lam : partitions(n)) {
          SymFun f = SymFun::basis_elem(Basis::s, lam);
          if (convert(kronecker(f, hq), Basis::m) != convert(plethysm_QaX(f, a), Basis::m))
            return fail("lambda=" + lam.to_string());
        }
        return ok();
      });
      r.check("kronecker-schur-route n=" + std::to_string(n) + " alpha=" + std::to_string(a), [n, a]() {
        // s_lambda[Q_a X] through Kronecker coefficients vs the direct route
        std::vector<Partition> parts = partitions(n);
        for (const Partition& lam : parts) {
          SymFun direct = convert(plethysm_QaX(SymFun::basis_elem(Basis::s, lam), a), Basis::s);
          SymFun viakron(n, Basis::s);
          for (const Partition& mu : parts) {
            ZPolyQ smuQa =
                principal_spec_int(SymFun::basis_elem(Basis::s, mu), a);
            if (smuQa.is_zero()) continue;
            SymFun g = convert(kronecker(SymFun::basis_elem(Basis::s, lam),
                                         SymFun::basis_elem(Basis::s, mu)),
                               Basis::s);
            viakron += g.scaled(RatQ(smuQa));
          }
          if (viakron != direct) return fail("lambda=" + lam.to_string());
        }
        return ok();
      });
    }
}

void suite_xy_check(Runner& r) {
  for (int n = 1; n <= r.rep.max_n; ++n) {
    r.check("xy-double-spec n=" + std::to_string(n), [n, &r]() {
      // X -> Q_2, Y -> Q_3 on both sides of the XY expansion
      std::vector<int> product_alphabet;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) product_alphabet.push_back(i + j);
      std::vector<DyckPath> paths = all_paths(n);
      std::function<std::string(const DyckPath&)> one =
          [&product_alphabet](const DyckPath& pi) -> std::string {
        RatQ lhs = eval_at_alphabet(csf_m(pi), product_alphabet);
        RatQ rhs;
        for (const auto& [lam, row] : xy_expand(pi)) {
          ZPolyQ mq2 = monomial_spec_int(lam, 2);
          if (mq2.is_zero()) continue;
          RatQ inner;
          for (const auto& [beta, weight] : row)
            inner += RatQ(weight) * RatQ(principal_spec_int(csf_m(beta), 3));
          rhs += RatQ(mq2) * inner;
        }
        return lhs == rhs ? "" : pi.to_string();
      };
      for (const std::string& w : parallel_map(paths, one, r.opts.workers))
        if (!w.empty()) return fail("path=" + w);
      return ok();
    });
    r.check("beta-level-sets n=" + std::to_string(n), [n, &r]() {
      // recoloring by an injection preserves chi of the result; monotone
      // injections preserve the path itself
      std::mt19937_64 rng(r.opts.seed + static_cast<unsigned>(n));
      for (const DyckPath& pi : all_paths(n)) {
        for (const Partition& lam : partitions(n)) {
          for (const auto& w : words_of_weight(lam)) {
            DyckPath base = beta_word(pi, w);
            std::vector<int> shifted(w);
            for (auto& v : shifted) v = 2 * v + 3; // monotone injection
            if (beta_word(pi, shifted) != base) return fail("path=" + pi.to_string());
            std::vector<int> targets{1, 2, 3, 4, 5, 6, 7};
            std::shuffle(targets.begin(), targets.end(), rng);
            std::vector<int> scrambled(w);
            for (auto& v : scrambled) v = targets[static_cast<std::size_t>(v - 1)];
            if (symfun_q1(csf_m_q1(beta_word(pi, scrambled))) != symfun_q1(csf_m_q1(base)))
              return fail("path=" + pi.to_string() + " non-monotone recoloring");
          }
        }
      }
      return ok();
    });
    r.check("beta-idempotent n=" + std::to_string(n), [n]() {
      for (const DyckPath& pi : all_paths(n)) {
        for (const Partition& lam : partitions(n)) {
          for (const auto& w : words_of_weight(lam)) {
            DyckPath b1 = beta_word(pi, w);
            // relabel w along the stable color sort to follow the vertices
            std::vector<std::pair<int, int>> order;
            for (int i = 1; i <= n; ++i) order.emplace_back(w[static_cast<std::size_t>(i - 1)], i);
            std::stable_sort(order.begin(), order.end());
            std::vector<int> w2(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w2[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)].first;
            if (beta_word(b1, w2) != b1) return fail("path=" + pi.to_string());
          }
        }
      }
      return ok();
    });
    r.check("beta-part-order-data n=" + std::to_string(n), [n]() {
      // recorded observation, not an assertion: does permuting the parts of S
      // change beta(pi,S)?
      int changed = 0, total = 0;
      for (const DyckPath& pi : all_paths(n)) {
        for (const SetPartition& s : set_partitions(n)) {
          DyckPath base = beta_setpartition(pi, s);
          auto parts = s.parts();
          std::sort(parts.begin(), parts.end());
          do {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (std::size_t b = 0; b < parts.size(); ++b)
              for (int v : parts[b]) w[static_cast<std::size_t>(v - 1)] = static_cast<int>(b) + 1;
            ++total;
            if (beta_word(pi, w) != base) ++changed;
          } while (std::next_permutation(parts.begin(), parts.end()));
        }
      }
      Outcome o = ok();
      o.witness = "part-order permutations changing beta: " + std::to_string(changed) + "/" +
                  std::to_string(total);
      return o;
    });
  }
}

void run_into(Runner& r, const std::string& name);

const std::vector<std::pair<std::string, int>>& suite_defaults() {
  static const std::vector<std::pair<std::string, int>> v = {
      {"prop2_6", 6},     {"thm3_1", 5},        {"thm4_2", 6},     {"gr_identity", 5},
      {"gjw", 5},         {"f_expansion", 6},   {"qhit", 6},       {"schur_qbinom", 6},
      {"conj5_3", 6},     {"symmetry5_6", 5},   {"llt_limit", 5},  {"hikita", 6},
      {"modular_law", 6}, {"complete_graph", 4}, {"schur_spec", 6}, {"kronecker_id", 4},
      {"xy_check", 4},
  };
  return v;
}

void run_into(Runner& r, const std::string& name) {
  if (name == "prop2_6") return suite_prop2_6(r);
  if (name == "thm3_1") return suite_thm3_1(r);
  if (name == "thm4_2") return suite_thm4_2(r);
  if (name == "gr_identity") return suite_gr_identity(r);
  if (name == "gjw") return suite_gjw(r);
  if (name == "f_expansion") return suite_f_expansion(r);
  if (name == "qhit") return suite_qhit(r);
  if (name == "schur_qbinom") return suite_schur_qbinom(r);
  if (name == "conj5_3") return suite_conj5_3(r);
  if (name == "symmetry5_6") return suite_symmetry5_6(r);
  if (name == "llt_limit") return suite_llt_limit(r);
  if (name == "hikita") return suite_hikita(r);
  if (name == "modular_law") return suite_modular_law(r);
  if (name == "complete_graph") return suite_complete_graph(r);
  if (name == "schur_spec") return suite_schur_spec(r);
  if (name == "kronecker_id") return suite_kronecker_id(r);
  if (name == "xy_check") return suite_xy_check(r);
  throw std::domain_error("unknown suite '" + name + "'");
}

} // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool SuiteReport::only_conjecture_failures() const {
  bool any = false;
  for (const auto& c : checks) {
    if (!c.pass) {
      if (!c.conjecture) return false;
      any = true;
    }
  }
  return any;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (max n " << max_n << ")\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : (c.conjecture ? "CONJECTURE-FAIL" : "FAIL")) << "] " << c.name
       << " (" << c.elapsed_ms << " ms)";
    if (!c.witness.empty()) os << "  -- " << c.witness;
    os << "\n";
  }
  os << (passed() ? "all checks passed" : "FAILURES PRESENT") << " in " << elapsed_ms << " ms\n";
  return os.str();
}

std::string SuiteReport::to_json_string() const {
  json checks_json = json::array();
  for (const auto& c : checks)
    checks_json.push_back(json{{"name", c.name},
                               {"pass", c.pass},
                               {"conjecture", c.conjecture},
                               {"witness", c.witness},
                               {"elapsed_ms", c.elapsed_ms}});
  json j{{"suite", suite},     {"max_n", max_n},           {"seed", seed},
         {"checks", checks_json}, {"elapsed_ms", elapsed_ms}, {"passed", passed()}};
  return j.dump(2);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, deflt] : suite_defaults()) out.push_back(name);
  out.push_back("all");
  return out;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  auto t0 = Clock::now();
  if (name == "all") {
    SuiteReport agg;
    agg.suite = "all";
    agg.seed = opts.seed;
    for (const auto& [sub, deflt] : suite_defaults()) {
      VerifyOptions o = opts;
      SuiteReport r = run_suite(sub, o);
      agg.max_n = std::max(agg.max_n, r.max_n);
      for (auto& c : r.checks) {
        c.name = sub + "/" + c.name;
        agg.checks.push_back(std::move(c));
      }
    }
    agg.elapsed_ms = ms_since(t0);
    return agg;
  }
  int deflt = 0;
  for (const auto& [n, d] : suite_defaults())
    if (n == name) deflt = d;
  if (deflt == 0) throw std::domain_error("unknown suite '" + name + "'");
  Runner r(opts, name, opts.max_n > 0 ? opts.max_n : deflt);
  run_into(r, name);
  r.rep.elapsed_ms = ms_since(t0);
  return r.rep;
}

} // namespace qchrom
