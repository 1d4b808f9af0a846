#include "symfun.hpp"

#include "words.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qchrom {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "e") return Basis::e;
  if (s == "h") return Basis::h;
  if (s == "p") return Basis::p;
  if (s == "s") return Basis::s;
  throw std::domain_error("unknown basis '" + s + "'");
}

SymFun SymFun::basis_elem(Basis b, const Partition& lambda) {
  SymFun f(lambda.size(), b);
  f.add_term(lambda, RatQ(1));
  return f;
}

RatQ SymFun::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? RatQ() : it->second;
}

void SymFun::add_term(const Partition& lambda, RatQ c) {
  if (lambda.size() != degree_) throw std::domain_error("SymFun: wrong-degree partition");
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SymFun::integral_coeffs() const {
  for (const auto& [l, c] : terms_)
    if (!c.is_laurent()) return false;
  return true;
}

bool SymFun::schur_positive_coeffs() const {
  for (const auto& [l, c] : terms_)
    if (!c.is_laurent() || !c.num().nonneg_coeffs()) return false;
  return true;
}

SymFun& SymFun::operator+=(const SymFun& o) {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::domain_error("SymFun: incompatible addition");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw std::domain_error("SymFun: incompatible subtraction");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymFun SymFun::scaled(const RatQ& c) const {
  SymFun r(degree_, basis_);
  if (c.is_zero()) return r;
  for (const auto& [l, v] : terms_) r.add_term(l, v * c);
  return r;
}

bool SymFun::operator==(const SymFun& o) const {
  return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
}

std::string SymFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << basis_name(basis_) << l.to_string();
  }
  return os.str();
}

namespace {

// ---- monomial-expansion tables, cached per degree ----------------------

using Expo = std::vector<int>; // exponent vector in n variables

// multiply two polynomials given as exponent-vector maps
std::map<Expo, BigInt> poly_mul(const std::map<Expo, BigInt>& a, const std::map<Expo, BigInt>& b) {
  std::map<Expo, BigInt> r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Expo e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r[e] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

std::map<Expo, BigInt> elementary_poly(int k, int n) {
  std::map<Expo, BigInt> r;
  std::vector<int> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      Expo e(static_cast<std::size_t>(n), 0);
      for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
      r[e] += 1;
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return r;
}

std::map<Expo, BigInt> homogeneous_poly(int k, int n) {
  std::map<Expo, BigInt> r;
  Expo e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = rem;
      r[e] += 1;
      e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[static_cast<std::size_t>(var)] = v;
      self(self, var + 1, rem - v);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, k);
  return r;
}

std::map<Expo, BigInt> power_poly(int k, int n) {
  std::map<Expo, BigInt> r;
  for (int i = 0; i < n; ++i) {
    Expo e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = k;
    r[e] += 1;
  }
  return r;
}

// Per-degree data: partition list (revlex), m-expansion matrices for each
// multiplicative basis, and their rational inverses for the m -> b solves.
struct DegreeTables {
  int n;
  std::vector<Partition> parts;                 // reverse-lexicographic
  std::map<Partition, int> index;
  std::map<Basis, std::vector<std::vector<BigInt>>> to_m;  // [lambda][mu]
  std::map<Basis, std::vector<std::vector<RatQ>>> inv;     // right-inverse: x = a * inv

  explicit DegreeTables(int deg) : n(deg) {
    parts = partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
    build(Basis::e);
    build(Basis::h);
    build(Basis::p);
    build(Basis::s);
  }

  void build(Basis b) {
    std::size_t np = parts.size();
    std::vector<std::vector<BigInt>> M(np, std::vector<BigInt>(np, BigInt(0)));
    for (std::size_t i = 0; i < np; ++i) {
      const Partition& lam = parts[i];
      if (b == Basis::s) {
        for (std::size_t j = 0; j < np; ++j) M[i][j] = kostka(lam, parts[j]);
        continue;
      }
      std::map<Expo, BigInt> poly;
      poly[Expo(static_cast<std::size_t>(n), 0)] = 1;
      for (int part : lam.parts()) {
        std::map<Expo, BigInt> factor = b == Basis::e   ? elementary_poly(part, n)
                                        : b == Basis::h ? homogeneous_poly(part, n)
                                                        : power_poly(part, n);
        poly = poly_mul(poly, factor);
      }
      for (std::size_t j = 0; j < np; ++j) {
        Expo mu(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < parts[j].length(); ++r) mu[static_cast<std::size_t>(r)] = parts[j].part(r);
        auto it = poly.find(mu);
        if (it != poly.end()) M[i][j] = it->second;
      }
    }
    // invert over the rationals (Gauss-Jordan)
    std::size_t np2 = np;
    std::vector<std::vector<RatQ>> a(np2, std::vector<RatQ>(2 * np2));
    for (std::size_t i = 0; i < np2; ++i) {
      for (std::size_t j = 0; j < np2; ++j) a[i][j] = RatQ(ZPolyQ(M[i][j]));
      a[i][np2 + i] = RatQ(1);
    }
    for (std::size_t col = 0; col < np2; ++col) {
      std::size_t piv = col;
      while (piv < np2 && a[piv][col].is_zero()) ++piv;
      if (piv == np2) throw std::logic_error("basis matrix singular");
      std::swap(a[col], a[piv]);
      RatQ ip = a[col][col].reciprocal();
      for (std::size_t c = 0; c < 2 * np2; ++c) a[col][c] *= ip;
      for (std::size_t r = 0; r < np2; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        RatQ f = a[r][col];
        for (std::size_t c = col; c < 2 * np2; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<std::vector<RatQ>> minv(np2, std::vector<RatQ>(np2));
    for (std::size_t i = 0; i < np2; ++i)
      for (std::size_t j = 0; j < np2; ++j) minv[i][j] = a[i][np2 + j];
    to_m[b] = std::move(M);
    inv[b] = std::move(minv);
  }
};

const DegreeTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<DegreeTables>(n)).first;
  return *it->second;
}

} // namespace

SymFun to_m(const SymFun& f) {
  if (f.basis() == Basis::m) return f;
  if (f.degree() == 0) {
    SymFun r(0, Basis::m);
    for (const auto& [l, c] : f.terms()) r.add_term(l, c);
    return r;
  }
  const DegreeTables& t = tables(f.degree());
  const auto& M = t.to_m.at(f.basis());
  SymFun r(f.degree(), Basis::m);
  for (const auto& [lam, c] : f.terms()) {
    std::size_t i = static_cast<std::size_t>(t.index.at(lam));
    for (std::size_t j = 0; j < t.parts.size(); ++j)
      if (M[i][j] != 0) r.add_term(t.parts[j], c * RatQ(ZPolyQ(M[i][j])));
  }
  return r;
}

SymFun convert(const SymFun& f, Basis target) {
  if (f.basis() == target) return f;
  SymFun fm = to_m(f);
  if (target == Basis::m) return fm;
  if (f.degree() == 0) {
    SymFun r(0, target);
    for (const auto& [l, c] : fm.terms()) r.add_term(l, c);
    return r;
  }
  const DegreeTables& t = tables(f.degree());
  const auto& inv = t.inv.at(target);
  std::size_t np = t.parts.size();
  std::vector<RatQ> a(np);
  for (const auto& [mu, c] : fm.terms()) a[static_cast<std::size_t>(t.index.at(mu))] = c;
  SymFun r(f.degree(), target);
  for (std::size_t j = 0; j < np; ++j) {
    RatQ x;
    for (std::size_t i = 0; i < np; ++i)
      if (!a[i].is_zero() && !inv[i][j].is_zero()) x += a[i] * inv[i][j];
    r.add_term(t.parts[j], std::move(x));
  }
  return r;
}

SymFun omega(const SymFun& f) {
  switch (f.basis()) {
    case Basis::e: {
      SymFun r(f.degree(), Basis::h);
      for (const auto& [l, c] : f.terms()) r.add_term(l, c);
      return r;
    }
    case Basis::h: {
      SymFun r(f.degree(), Basis::e);
      for (const auto& [l, c] : f.terms()) r.add_term(l, c);
      return r;
    }
    case Basis::s: {
      SymFun r(f.degree(), Basis::s);
      for (const auto& [l, c] : f.terms()) r.add_term(l.conjugate(), c);
      return r;
    }
    case Basis::p: {
      SymFun r(f.degree(), Basis::p);
      for (const auto& [l, c] : f.terms()) {
        int sign = (l.size() - l.length()) % 2 ? -1 : 1;
        r.add_term(l, sign < 0 ? -c : c);
      }
      return r;
    }
    case Basis::m: {
      return convert(omega(convert(f, Basis::s)), Basis::m);
    }
  }
  throw std::logic_error("omega: bad basis");
}

SymFun product(const SymFun& f, const SymFun& g) {
  Basis out_basis = f.basis();
  bool multiplicative = f.basis() == g.basis() &&
                        (f.basis() == Basis::e || f.basis() == Basis::h || f.basis() == Basis::p);
  SymFun fp = multiplicative ? f : convert(f, Basis::p);
  SymFun gp = multiplicative ? g : convert(g, Basis::p);
  SymFun r(f.degree() + g.degree(), multiplicative ? f.basis() : Basis::p);
  for (const auto& [la, ca] : fp.terms())
    for (const auto& [lb, cb] : gp.terms()) r.add_term(merge_parts(la, lb), ca * cb);
  return convert(r, out_basis);
}

SymFun kronecker(const SymFun& f, const SymFun& g) {
  if (f.degree() != g.degree()) throw std::domain_error("kronecker: degree mismatch");
  SymFun fp = convert(f, Basis::p);
  SymFun gp = convert(g, Basis::p);
  SymFun r(f.degree(), Basis::p);
  for (const auto& [l, c] : fp.terms()) {
    RatQ other = gp.coeff(l);
    if (!other.is_zero()) r.add_term(l, c * other * RatQ(ZPolyQ(l.z())));
  }
  return convert(r, f.basis());
}

AlphaElem principal_spec_formal(const SymFun& f) {
  SymFun fp = convert(f, Basis::p);
  AlphaElem r;
  for (const auto& [l, c] : fp.terms()) {
    AlphaElem term = AlphaElem::one();
    for (int part : l.parts()) term *= power_sum_Qalpha(part);
    r += term.scaled(c);
  }
  return r;
}

RatQ eval_at_alphabet(const SymFun& f, const std::vector<int>& qexps) {
  SymFun fm = to_m(f);
  int k = static_cast<int>(qexps.size());
  RatQ total;
  for (const auto& [mu, c] : fm.terms()) {
    if (mu.length() > k) continue;
    std::vector<int> expo(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < mu.length(); ++i) expo[static_cast<std::size_t>(i)] = mu.part(i);
    std::sort(expo.begin(), expo.end());
    ZPolyQ val;
    do {
      int e = 0;
      for (int i = 0; i < k; ++i) e += expo[static_cast<std::size_t>(i)] * qexps[static_cast<std::size_t>(i)];
      val.add_term(1, e);
    } while (std::next_permutation(expo.begin(), expo.end()));
    total += c * RatQ(std::move(val));
  }
  return total;
}

ZPolyQ principal_spec_int(const SymFun& f, int a) {
  if (a < 0) throw std::domain_error("principal_spec_int: negative alpha");
  std::vector<int> exps(static_cast<std::size_t>(a));
  std::iota(exps.begin(), exps.end(), 0);
  return eval_at_alphabet(f, exps).to_zpoly();
}

AlphaElem schur_spec_syt(const Partition& lambda) {
  int n = lambda.size();
  AlphaElem r;
  for (const Tableau& t : syt(lambda)) {
    int d = tableau_descents(t);
    int m = tableau_maj(t);
    r += qbinom_formal(n - 1 - d, n).scaled(RatQ(ZPolyQ::q_power(m)));
  }
  return r;
}

SymFun plethysm_QaX(const SymFun& f, int a) {
  if (a < 0) throw std::domain_error("plethysm_QaX: negative alpha");
  SymFun fp = convert(f, Basis::p);
  SymFun r(f.degree(), Basis::p);
  for (const auto& [l, c] : fp.terms()) {
    ZPolyQ scale(1);
    for (int part : l.parts()) {
      ZPolyQ pk; // p_part[Q_a] = 1 + q^part + ... + q^{part(a-1)}
      for (int i = 0; i < a; ++i) pk.add_term(1, part * i);
      scale *= pk;
    }
    r.add_term(l, c * RatQ(std::move(scale)));
  }
  return convert(r, f.basis());
}

ZPolyQ monomial_spec_int(const Partition& lambda, int a) {
  std::vector<int> exps(static_cast<std::size_t>(a));
  std::iota(exps.begin(), exps.end(), 0);
  return eval_at_alphabet(SymFun::basis_elem(Basis::m, lambda), exps).to_zpoly();
}

SymFun h_n_QaX(int n, int a) {
  SymFun r(n, Basis::h);
  for (const Partition& lam : partitions(n)) {
    ZPolyQ c = monomial_spec_int(lam, a);
    if (!c.is_zero()) r.add_term(lam, RatQ(std::move(c)));
  }
  return r;
}

AlphaElem AlphaSymFun::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? AlphaElem() : it->second;
}

void AlphaSymFun::add_term(const Partition& lambda, AlphaElem c) {
  if (lambda.size() != degree_) throw std::domain_error("AlphaSymFun: wrong-degree partition");
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool AlphaSymFun::operator==(const AlphaSymFun& o) const {
  return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
}

SymFun AlphaSymFun::eval_at_alpha(int a) const {
  SymFun r(degree_, basis_);
  for (const auto& [l, c] : terms_) r.add_term(l, c.eval_at_alpha(a));
  return r;
}

std::string AlphaSymFun::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string() + "]*" + basis_name(basis_) + l.to_string();
  }
  return s;
}

AlphaSymFun alpha_m_to_s(const AlphaSymFun& f) {
  if (f.basis() != Basis::m) throw std::domain_error("alpha_m_to_s: expected m basis");
  // back-substitution against the unitriangular Kostka matrix, in the
  // dominance-refining reverse-lexicographic order
  std::vector<Partition> parts = partitions(f.degree());
  AlphaSymFun out(f.degree(), Basis::s);
  std::map<Partition, AlphaElem> residual;
  for (const auto& [l, c] : f.terms()) residual[l] = c;
  for (const Partition& lam : parts) {
    auto it = residual.find(lam);
    if (it == residual.end() || it->second.is_zero()) continue;
    AlphaElem b = it->second; // K_{lam,lam} = 1
    out.add_term(lam, b);
    for (const Partition& mu : parts) {
      if (mu == lam) continue;
      BigInt k = lam.dominates(mu) ? kostka(lam, mu) : BigInt(0);
      if (k != 0) residual[mu] -= b.scaled(RatQ(ZPolyQ(k)));
    }
    residual.erase(lam);
  }
  for (const auto& [l, c] : residual)
    if (!c.is_zero()) throw std::logic_error("alpha_m_to_s: residue left after solve");
  return out;
}

} // namespace qchrom
