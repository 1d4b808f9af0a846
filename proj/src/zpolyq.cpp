#include "zpolyq.hpp"

#include <sstream>
#include <stdexcept>

namespace qchrom {

void ZPolyQ::trim() {
  std::size_t lo = 0, hi = coef_.size();
  while (hi > lo && coef_[hi - 1] == 0) --hi;
  while (lo < hi && coef_[lo] == 0) ++lo;
  if (lo == hi) {
    coef_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0) coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(lo));
  coef_.resize(hi - lo);
  min_exp_ += static_cast<int>(lo);
}

ZPolyQ ZPolyQ::monomial(const BigInt& c, int exp) {
  ZPolyQ r;
  if (c != 0) {
    r.min_exp_ = exp;
    r.coef_.push_back(c);
  }
  return r;
}

int ZPolyQ::min_exp() const {
  if (coef_.empty()) throw std::domain_error("ZPolyQ: exponent of zero polynomial");
  return min_exp_;
}

int ZPolyQ::max_exp() const {
  if (coef_.empty()) throw std::domain_error("ZPolyQ: exponent of zero polynomial");
  return min_exp_ + static_cast<int>(coef_.size()) - 1;
}

bool ZPolyQ::is_one() const {
  return coef_.size() == 1 && min_exp_ == 0 && coef_[0] == 1;
}

bool ZPolyQ::nonneg_coeffs() const {
  for (const auto& c : coef_)
    if (c < 0) return false;
  return true;
}

BigInt ZPolyQ::coeff(int exp) const {
  if (coef_.empty() || exp < min_exp_ || exp > min_exp_ + static_cast<int>(coef_.size()) - 1)
    return 0;
  return coef_[static_cast<std::size_t>(exp - min_exp_)];
}

const BigInt& ZPolyQ::leading_coeff() const {
  if (coef_.empty()) throw std::domain_error("ZPolyQ: leading coefficient of zero");
  return coef_.back();
}

BigInt ZPolyQ::content() const {
  BigInt g = 0;
  for (const auto& c : coef_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? BigInt(-g) : g;
}

int ZPolyQ::term_count() const {
  int n = 0;
  for (const auto& c : coef_)
    if (c != 0) ++n;
  return n;
}

void ZPolyQ::add_term(const BigInt& c, int exp) {
  if (c == 0) return;
  if (coef_.empty()) {
    min_exp_ = exp;
    coef_.push_back(c);
    return;
  }
  if (exp < min_exp_) {
    coef_.insert(coef_.begin(), static_cast<std::size_t>(min_exp_ - exp), BigInt(0));
    min_exp_ = exp;
  } else if (exp > min_exp_ + static_cast<int>(coef_.size()) - 1) {
    coef_.resize(static_cast<std::size_t>(exp - min_exp_) + 1, BigInt(0));
  }
  coef_[static_cast<std::size_t>(exp - min_exp_)] += c;
  trim();
}

ZPolyQ& ZPolyQ::operator+=(const ZPolyQ& o) {
  if (o.coef_.empty()) return *this;
  if (coef_.empty()) {
    *this = o;
    return *this;
  }
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(min_exp_ + static_cast<int>(coef_.size()), o.min_exp_ + static_cast<int>(o.coef_.size()));
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo), BigInt(0));
  for (std::size_t i = 0; i < coef_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] = std::move(coef_[i]);
  for (std::size_t i = 0; i < o.coef_.size(); ++i) out[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coef_[i];
  coef_ = std::move(out);
  min_exp_ = lo;
  trim();
  return *this;
}

ZPolyQ& ZPolyQ::operator-=(const ZPolyQ& o) { return *this += -o; }

ZPolyQ ZPolyQ::operator-() const {
  ZPolyQ r(*this);
  for (auto& c : r.coef_) c = -c;
  return r;
}

ZPolyQ operator*(const ZPolyQ& a, const ZPolyQ& b) {
  ZPolyQ r;
  if (a.coef_.empty() || b.coef_.empty()) return r;
  r.min_exp_ = a.min_exp_ + b.min_exp_;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j)
      if (b.coef_[j] != 0) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  r.trim();
  return r;
}

ZPolyQ& ZPolyQ::operator*=(const ZPolyQ& o) {
  *this = *this * o;
  return *this;
}

ZPolyQ ZPolyQ::shifted(int k) const {
  ZPolyQ r(*this);
  if (!r.coef_.empty()) r.min_exp_ += k;
  return r;
}

ZPolyQ ZPolyQ::subst_q_inverse() const {
  ZPolyQ r;
  if (coef_.empty()) return r;
  r.coef_.assign(coef_.rbegin(), coef_.rend());
  r.min_exp_ = -(min_exp_ + static_cast<int>(coef_.size()) - 1);
  return r;
}

ZPolyQ ZPolyQ::subst_q_power(int k) const {
  if (k < 1) throw std::domain_error("ZPolyQ: q -> q^k needs k >= 1");
  ZPolyQ r;
  for_terms([&](int e, const BigInt& c) { r.add_term(c, e * k); });
  return r;
}

ZPolyQ ZPolyQ::divided_by_content() const {
  BigInt g = content();
  if (g <= 1) return *this;
  ZPolyQ r(*this);
  for (auto& c : r.coef_) c /= g;
  return r;
}

BigInt ZPolyQ::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coef_) s += c;
  return s;
}

bool ZPolyQ::try_divide(const ZPolyQ& a, const ZPolyQ& d, ZPolyQ& quot) {
  if (d.coef_.empty()) throw std::domain_error("ZPolyQ: division by zero");
  quot = ZPolyQ();
  if (a.coef_.empty()) return true;
  // strip q-power units so both ends have nonzero constant terms
  int shift = a.min_exp_ - d.min_exp_;
  ZPolyQ rem = a.shifted(-a.min_exp_);
  ZPolyQ den = d.shifted(-d.min_exp_);
  int dd = den.max_exp();
  while (!rem.is_zero() && rem.max_exp() >= dd) {
    if (rem.leading_coeff() % den.leading_coeff() != 0) return false;
    BigInt qc = rem.leading_coeff() / den.leading_coeff();
    int qe = rem.max_exp() - dd;
    quot.add_term(qc, qe);
    rem -= den * monomial(qc, qe);
  }
  if (!rem.is_zero()) return false;
  quot = quot.shifted(shift);
  return true;
}

ZPolyQ ZPolyQ::divexact(const ZPolyQ& d) const {
  ZPolyQ quot;
  if (!try_divide(*this, d, quot))
    throw std::domain_error("ZPolyQ: non-exact division");
  return quot;
}

ZPolyQ ZPolyQ::pow(int k) const {
  if (k < 0) throw std::domain_error("ZPolyQ: negative power");
  ZPolyQ r = one();
  ZPolyQ base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::string ZPolyQ::to_string() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for_terms([&](int e, const BigInt& c) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && e != 0;
    if (!unit) os << a.str();
    if (e != 0) {
      if (!unit) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  });
  return os.str();
}

ZPolyQ qint(int k) {
  if (k < 0) throw std::domain_error("qint: negative argument");
  ZPolyQ r;
  for (int i = 0; i < k; ++i) r.add_term(1, i);
  return r;
}

ZPolyQ qfact(int n) {
  ZPolyQ r = ZPolyQ::one();
  for (int i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

ZPolyQ qbinom_int(int n, int k) {
  if (k < 0 || k > n) return ZPolyQ();
  ZPolyQ num = ZPolyQ::one();
  for (int i = 0; i < k; ++i) num *= qint(n - i);
  return num.divexact(qfact(k));
}

namespace {

// primitive part of the polynomial obtained by stripping the q-power shift
ZPolyQ primitive_poly_part(const ZPolyQ& a) {
  if (a.is_zero()) return a;
  ZPolyQ p = a.shifted(-a.min_exp());
  p = p.divided_by_content();
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

} // namespace

ZPolyQ poly_gcd(const ZPolyQ& a, const ZPolyQ& b) {
  if (a.is_zero()) return primitive_poly_part(b);
  if (b.is_zero()) return primitive_poly_part(a);
  int shift = std::min(a.min_exp(), b.min_exp());
  ZPolyQ u = primitive_poly_part(a);
  ZPolyQ v = primitive_poly_part(b);
  if (u.max_exp() < v.max_exp()) std::swap(u, v);
  // Euclid on primitive parts; the remainder step scales instead of dividing
  while (!v.is_zero()) {
    int dv = v.max_exp();
    ZPolyQ r = u;
    while (!r.is_zero() && r.max_exp() >= dv) {
      int qe = r.max_exp() - dv;
      ZPolyQ lead = ZPolyQ::monomial(r.leading_coeff(), qe);
      r = r * ZPolyQ(v.leading_coeff()) - v * lead;
    }
    u = v;
    v = primitive_poly_part(r);
  }
  return primitive_poly_part(u).shifted(shift);
}

} // namespace qchrom
