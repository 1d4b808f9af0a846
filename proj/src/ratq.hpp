#pragma once

#include "zpolyq.hpp"

namespace qchrom {

/// Element of Q(q): reduced ratio of two Laurent polynomials.
///
/// Normal form: denominator nonzero with no negative exponents, nonzero
/// constant term, positive leading coefficient; polynomial gcd and shared
/// integer content removed. A value whose denominator is 1 is a Laurent
/// polynomial and converts back losslessly.
class RatQ {
public:
  RatQ() : num_(), den_(1) {}
  RatQ(long c) : num_(c), den_(1) {}
  RatQ(ZPolyQ p) : num_(std::move(p)), den_(1) {}
  RatQ(ZPolyQ num, ZPolyQ den);

  const ZPolyQ& num() const { return num_; }
  const ZPolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// exact conversion; throws when the value is not a Laurent polynomial.
  const ZPolyQ& to_zpoly() const;

  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  RatQ operator-() const;
  RatQ reciprocal() const;
  bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  ZPolyQ num_, den_;
  void normalize();
};

} // namespace qchrom
