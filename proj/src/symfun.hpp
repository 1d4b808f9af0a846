#pragma once

#include "alpha.hpp"
#include "partition.hpp"
#include "tableau.hpp"

#include <map>

namespace qchrom {

enum class Basis { m, e, h, p, s };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& s);

/// Homogeneous symmetric function of one degree, expanded in one basis.
/// Coefficients are exact elements of Q(q); the m/e/h/s expansions of every
/// quantity the theory asserts to be integral stay Laurent, and that is
/// checked by callers rather than silently coerced.
class SymFun {
public:
  SymFun(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  static SymFun basis_elem(Basis b, const Partition& lambda);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, RatQ>& terms() const { return terms_; }
  RatQ coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, RatQ c);
  void set_basis(Basis b) { basis_ = b; }

  bool is_zero() const { return terms_.empty(); }
  bool integral_coeffs() const;
  /// all coefficients in N[q]
  bool schur_positive_coeffs() const;

  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  SymFun scaled(const RatQ& c) const;
  bool operator==(const SymFun& o) const;
  bool operator!=(const SymFun& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  int degree_;
  Basis basis_;
  std::map<Partition, RatQ> terms_;
};

/// expansion into the monomial basis.
SymFun to_m(const SymFun& f);
/// exact change of basis.
SymFun convert(const SymFun& f, Basis target);

SymFun omega(const SymFun& f);
SymFun product(const SymFun& f, const SymFun& g);
/// Kronecker product via p_mu (*) p_nu = delta z_mu p_mu; equal degrees required.
SymFun kronecker(const SymFun& f, const SymFun& g);

/// f[Q_alpha] with formal alpha, through the power-sum expansion.
AlphaElem principal_spec_formal(const SymFun& f);
/// independent oracle: evaluate the monomial expansion at the explicit
/// alphabet (q^{e_1}, ..., q^{e_k}).
RatQ eval_at_alphabet(const SymFun& f, const std::vector<int>& qexps);
/// f[Q_a] for integer a >= 0 by the alphabet route; must be polynomial.
ZPolyQ principal_spec_int(const SymFun& f, int a);

/// s_lambda[Q_alpha] = sum over SYT of q^{maj(T)} [alpha+n-1-d(T) over n]_q.
AlphaElem schur_spec_syt(const Partition& lambda);

/// f[Q_a X] for integer a >= 0 (power-sum scaling route), result in f's basis.
SymFun plethysm_QaX(const SymFun& f, int a);
/// h_n[Q_a X] = sum_lambda m_lambda[Q_a] h_lambda[X].
SymFun h_n_QaX(int n, int a);

/// m_lambda[Q_a] for integer a >= 0.
ZPolyQ monomial_spec_int(const Partition& lambda, int a);

/// Symmetric function with formal-alpha coefficients.
class AlphaSymFun {
public:
  AlphaSymFun(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, AlphaElem>& terms() const { return terms_; }
  AlphaElem coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, AlphaElem c);
  bool operator==(const AlphaSymFun& o) const;
  bool operator!=(const AlphaSymFun& o) const { return !(*this == o); }
  /// substitute t := q^a in every coefficient.
  SymFun eval_at_alpha(int a) const;
  std::string to_string() const;

private:
  int degree_;
  Basis basis_;
  std::map<Partition, AlphaElem> terms_;
};

/// unitriangular m -> s change of basis applied to formal-alpha coefficients.
AlphaSymFun alpha_m_to_s(const AlphaSymFun& f);

} // namespace qchrom
