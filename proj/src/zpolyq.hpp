#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qchrom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in q with big-integer coefficients.
///
/// Canonical form: zero is the empty coefficient vector; otherwise the
/// stored range [min_exp, max_exp] has nonzero end coefficients. All
/// arithmetic is exact; equality is structural on the canonical form.
class ZPolyQ {
public:
  ZPolyQ() = default;
  ZPolyQ(long c) { *this = monomial(BigInt(c), 0); }
  explicit ZPolyQ(const BigInt& c) { *this = monomial(c, 0); }

  static ZPolyQ monomial(const BigInt& c, int exp);
  static ZPolyQ q_power(int exp) { return monomial(1, exp); }
  static ZPolyQ one() { return ZPolyQ(1); }

  bool is_zero() const { return coef_.empty(); }
  /// min/max exponent of a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;
  bool is_constant() const { return coef_.empty() || (min_exp_ == 0 && coef_.size() == 1); }
  bool is_one() const;
  /// true when no negative exponent is present (ordinary polynomial in q).
  bool is_polynomial() const { return coef_.empty() || min_exp_ >= 0; }
  /// all coefficients nonnegative (membership in ℕ[q]).
  bool nonneg_coeffs() const;

  BigInt coeff(int exp) const;
  const BigInt& leading_coeff() const;
  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  int term_count() const;

  ZPolyQ& operator+=(const ZPolyQ& o);
  ZPolyQ& operator-=(const ZPolyQ& o);
  ZPolyQ& operator*=(const ZPolyQ& o);
  friend ZPolyQ operator+(ZPolyQ a, const ZPolyQ& b) { return a += b; }
  friend ZPolyQ operator-(ZPolyQ a, const ZPolyQ& b) { return a -= b; }
  friend ZPolyQ operator*(const ZPolyQ& a, const ZPolyQ& b);
  ZPolyQ operator-() const;
  bool operator==(const ZPolyQ& o) const { return min_exp_ == o.min_exp_ && coef_ == o.coef_; }
  bool operator!=(const ZPolyQ& o) const { return !(*this == o); }

  void add_term(const BigInt& c, int exp);
  ZPolyQ shifted(int k) const;             // multiply by q^k
  ZPolyQ subst_q_inverse() const;          // q -> 1/q
  ZPolyQ subst_q_power(int k) const;       // q -> q^k, k >= 1
  ZPolyQ divided_by_content() const;
  BigInt eval_at_one() const;

  /// Exact division; throws std::domain_error when the remainder is nonzero.
  ZPolyQ divexact(const ZPolyQ& d) const;
  static bool try_divide(const ZPolyQ& a, const ZPolyQ& d, ZPolyQ& quot);

  ZPolyQ pow(int k) const;

  std::string to_string() const;

  /// iteration support: f(exp, coeff) over nonzero terms, ascending exponent
  template <class F> void for_terms(F&& f) const {
    for (std::size_t i = 0; i < coef_.size(); ++i)
      if (coef_[i] != 0) f(min_exp_ + static_cast<int>(i), coef_[i]);
  }

private:
  int min_exp_ = 0;
  std::vector<BigInt> coef_;
  void trim();
  friend ZPolyQ poly_gcd(const ZPolyQ&, const ZPolyQ&);
};

/// q-integer [k]_q = 1 + q + ... + q^{k-1}; rejects negative k.
ZPolyQ qint(int k);
/// q-factorial [n]_q!.
ZPolyQ qfact(int n);
/// Gaussian binomial [n over k]_q as a polynomial (0 when k < 0 or k > n).
ZPolyQ qbinom_int(int n, int k);

/// gcd of Laurent polynomials, primitive up to the shared q-power and sign.
ZPolyQ poly_gcd(const ZPolyQ& a, const ZPolyQ& b);

} // namespace qchrom
