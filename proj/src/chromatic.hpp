#pragma once

#include "dyck.hpp"
#include "symfun.hpp"

namespace qchrom {

/// attacking pairs i < j with w_i > w_j.
int inv_pi(const DyckPath& pi, const std::vector<int>& w);
/// attacking pairs i < j with w_i < w_j.
int asc_pi_word(const DyckPath& pi, const std::vector<int>& w);

/// chromatic quasisymmetric function, monomial expansion.
SymFun csf_m(const DyckPath& pi);
/// unicellular LLT polynomial, monomial expansion (properness dropped).
SymFun llt_m(const DyckPath& pi);
/// chromatic symmetric function at q=1 (proper-coloring counts only).
SymFun csf_m_q1(const DyckPath& pi);

/// P-descent set of sigma: positions i with sigma_{i+1} <_pi sigma_i.
std::vector<int> pdes(const DyckPath& pi, const std::vector<int>& sigma);

struct FTriple {
  std::vector<int> sigma;
  int exponent = 0;          // inv_pi(sigma^{-1})
  std::vector<int> pdes;     // P-descent positions
};

/// Shareshian-Wachs expansion data: one triple per permutation.
struct FExpansion {
  int n = 0;
  std::vector<FTriple> triples;
};

FExpansion f_expansion(const DyckPath& pi);
/// reconstruct the monomial expansion from fundamental quasisymmetric pieces.
SymFun f_to_m(const FExpansion& fe);

/// Modular-law triple (pi0, pi1, pi2) with 2 f(pi1) = f(pi0) + f(pi2).
struct ModularTriple {
  DyckPath pi0, pi1, pi2;
  int position = 0;
  int type = 1; // 1 or 2, per the two defining conditions
};

/// every triple of either type whose middle path has n vertices.
std::vector<ModularTriple> modular_triples(int n);

} // namespace qchrom
