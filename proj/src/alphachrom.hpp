#pragma once

#include "chromatic.hpp"

#include <map>
#include <tuple>

namespace qchrom {

/// Bi-word statistics for the binomial-basis monomial expansion.
/// The bi-letter order compares colors first and breaks color ties by the
/// strict poset order; incomparable equal-color pairs are not ascents.
int asc_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma);
int comaj_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma);
int stat_biword(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma);

/// Monomial expansion with binomial-basis coefficients: for each content
/// lambda the coordinate of [alpha+k over n]_q collects q^{stat} over
/// bi-words with asc = k.
struct BiwordExpansion {
  int n = 0;
  std::map<Partition, AlphaExpansion> coeffs;
  AlphaSymFun to_alpha_symfun() const;
};

BiwordExpansion alpha_csf_biword(const DyckPath& pi);

/// Reference route: the word-product formula over induced subpaths,
/// giving formal-alpha coefficients directly.
AlphaSymFun alpha_csf_wordproduct(const DyckPath& pi);

/// Integer-alpha oracle: enumerate alpha-decorated proper colorings.
/// a = 0 means the empty alphabet and yields the zero function.
SymFun alpha_csf_decorated(const DyckPath& pi, int a);

struct DecoratedColoring {
  std::vector<int> colors;
  std::vector<int> decorations;
  bool operator==(const DecoratedColoring& o) const {
    return colors == o.colors && decorations == o.decorations;
  }
};

bool decorated_proper(const DyckPath& pi, const DecoratedColoring& cd);

/// The bijection between (w, sigma, tau) triples and decorated colorings.
DecoratedColoring phi(const DyckPath& pi, const std::vector<int>& w, const std::vector<int>& sigma,
                      const std::vector<int>& tau, int alpha);
std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>
phi_inverse(const DyckPath& pi, const DecoratedColoring& cd, int alpha);

/// Falling-factorial expansion at q=1: entry k is the sum of chromatic
/// symmetric functions of beta(pi, S) over set partitions with k parts.
std::map<int, SymFun> falling_q1(const DyckPath& pi);

/// RHS data of the XY expansion: for each content lambda, the aggregated
/// q^{inv} weight of each resulting path beta(pi, w).
std::map<Partition, std::map<DyckPath, ZPolyQ>> xy_expand(const DyckPath& pi);

/// Schur coefficients of the alpha-chromatic symmetric function in the
/// requested alpha-basis; falling-basis non-integrality is reported via the
/// exact rational coordinates, never an error.
std::map<Partition, AlphaExpansion> alpha_schur(const DyckPath& pi, AlphaBasis basis);

/// Schur coefficients of the alpha-chromatic function as formal-alpha elements.
AlphaSymFun alpha_schur_formal(const DyckPath& pi);

struct LltSchurRoutes {
  SymFun via_qbinom;  // (sum_k c^k) / [n]_q!
  SymFun via_falling; // q^{-C(n,2)} d^n
  SymFun direct;      // convert(llt_m, s)
};

LltSchurRoutes llt_schur_limit_routes(const DyckPath& pi);
/// LLT Schur expansion recovered from the alpha-expansion limit; exact
/// division by [n]_q! failing is a hard error.
SymFun llt_schur_via_limit(const DyckPath& pi);

} // namespace qchrom
