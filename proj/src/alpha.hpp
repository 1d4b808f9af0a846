#pragma once

#include "ratq.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qchrom {

/// Polynomial in t = q^alpha with coefficients in Q(q).
///
/// Substituting t := q^a for an integer a >= 0 turns the element into a
/// RatQ; wherever a quantity is asserted to be polynomial, that RatQ must
/// reduce to a ZPolyQ. The q-analogue [alpha]_q is represented exactly as
/// (t - 1)/(q - 1).
class AlphaElem {
public:
  AlphaElem() = default;
  AlphaElem(long c) { set_coeff(0, RatQ(c)); }
  AlphaElem(RatQ c) { set_coeff(0, std::move(c)); }

  static AlphaElem t_monomial(RatQ c, int k);
  static AlphaElem one() { return AlphaElem(1); }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  RatQ coeff(int k) const;
  void set_coeff(int k, RatQ v);

  AlphaElem& operator+=(const AlphaElem& o);
  AlphaElem& operator-=(const AlphaElem& o);
  friend AlphaElem operator+(AlphaElem a, const AlphaElem& b) { return a += b; }
  friend AlphaElem operator-(AlphaElem a, const AlphaElem& b) { return a -= b; }
  friend AlphaElem operator*(const AlphaElem& a, const AlphaElem& b);
  AlphaElem& operator*=(const AlphaElem& o) { return *this = *this * o; }
  AlphaElem operator-() const;
  AlphaElem scaled(const RatQ& s) const;
  bool operator==(const AlphaElem& o) const { return c_ == o.c_; }
  bool operator!=(const AlphaElem& o) const { return !(*this == o); }

  /// substitute t := q^a (a >= 0) and reduce.
  RatQ eval_at_alpha(int a) const;

  std::string to_string() const;

private:
  std::vector<RatQ> c_; // c_[k] multiplies t^k; trailing zeros trimmed
  void trim();
};

/// [alpha]_q = (t-1)/(q-1).
AlphaElem alpha_q();
/// q-falling factorial [alpha]_q^(k) = [alpha][alpha-1]...[alpha-k+1]; k=0 gives 1.
AlphaElem falling_formal(int k);
/// q-binomial [alpha+k over n]_q = [alpha+k]^(n) / [n]_q!.
AlphaElem qbinom_formal(int k, int n);
/// p_k[Q_alpha] = (t^k - 1)/(q^k - 1).
AlphaElem power_sum_Qalpha(int k);

enum class AlphaBasis { FallingFactorial, QBinomialShift };

/// Coordinates of an AlphaElem in one of the two alpha-bases.
/// FallingFactorial indexes k in 1..n, QBinomialShift indexes k in 0..n-1.
/// Coordinates are kept as exact RatQ so non-integrality can be reported.
struct AlphaExpansion {
  AlphaBasis basis = AlphaBasis::QBinomialShift;
  int n = 0;
  std::vector<RatQ> coord; // coord[i] multiplies basis element with k = i + k_offset()

  int k_offset() const { return basis == AlphaBasis::FallingFactorial ? 1 : 0; }
  const RatQ& at_k(int k) const { return coord.at(static_cast<std::size_t>(k - k_offset())); }
  bool integral() const;
  bool nonneg_integral() const;
  AlphaElem synthesize() const;
};

AlphaElem basis_element(AlphaBasis basis, int k, int n);

struct NotInSpanError : std::domain_error {
  AlphaElem residual;
  explicit NotInSpanError(AlphaElem r)
      : std::domain_error("alpha_to_basis: element not in span, residual " + r.to_string()),
        residual(std::move(r)) {}
};

/// Exact change of basis by a dense linear solve over RatQ, followed by a
/// round-trip check. Throws NotInSpanError when the element is outside the
/// requested span.
AlphaExpansion alpha_to_basis(const AlphaElem& e, AlphaBasis basis, int n);

} // namespace qchrom
