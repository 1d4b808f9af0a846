#include "ratq.hpp"

#include <stdexcept>

namespace qchrom {

RatQ::RatQ(ZPolyQ num, ZPolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
  normalize();
}

void RatQ::normalize() {
  if (num_.is_zero()) {
    den_ = ZPolyQ(1);
    return;
  }
  if (den_.is_one()) return;
  // move the denominator's q-power unit into the numerator
  int dshift = den_.min_exp();
  if (dshift != 0) {
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);
  }
  if (!den_.is_constant()) {
    ZPolyQ g = poly_gcd(num_.shifted(-num_.min_exp()), den_);
    if (!g.is_one() && !g.is_constant()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  BigInt cg = boost::multiprecision::gcd(num_.content(), den_.content());
  if (cg > 1) {
    num_ = num_.divexact(ZPolyQ(cg));
    den_ = den_.divexact(ZPolyQ(cg));
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const ZPolyQ& RatQ::to_zpoly() const {
  if (!den_.is_one()) throw std::domain_error("RatQ: not a Laurent polynomial: " + to_string());
  return num_;
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    num_ = ZPolyQ();
    den_ = ZPolyQ(1);
    return *this;
  }
  num_ *= o.num_;
  if (!o.den_.is_one()) den_ *= o.den_;
  if (!den_.is_one()) normalize();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) {
  if (o.num_.is_zero()) throw std::domain_error("RatQ: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatQ RatQ::operator-() const {
  RatQ r(*this);
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("RatQ: reciprocal of zero");
  RatQ r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

std::string RatQ::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace qchrom
