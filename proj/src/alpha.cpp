#include "alpha.hpp"

#include <memory>
#include <mutex>

namespace qchrom {

namespace {

ZPolyQ q_minus_1() {
  ZPolyQ p;
  p.add_term(1, 1);
  p.add_term(-1, 0);
  return p;
}

} // namespace

void AlphaElem::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlphaElem AlphaElem::t_monomial(RatQ c, int k) {
  AlphaElem r;
  r.set_coeff(k, std::move(c));
  return r;
}

RatQ AlphaElem::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return RatQ();
  return c_[static_cast<std::size_t>(k)];
}

void AlphaElem::set_coeff(int k, RatQ v) {
  if (k < 0) throw std::domain_error("AlphaElem: negative t-degree");
  if (k >= static_cast<int>(c_.size())) {
    if (v.is_zero()) return;
    c_.resize(static_cast<std::size_t>(k) + 1);
  }
  c_[static_cast<std::size_t>(k)] = std::move(v);
  trim();
}

AlphaElem& AlphaElem::operator+=(const AlphaElem& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlphaElem& AlphaElem::operator-=(const AlphaElem& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlphaElem operator*(const AlphaElem& a, const AlphaElem& b) {
  AlphaElem r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, RatQ());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

AlphaElem AlphaElem::operator-() const {
  AlphaElem r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

AlphaElem AlphaElem::scaled(const RatQ& s) const {
  AlphaElem r(*this);
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

RatQ AlphaElem::eval_at_alpha(int a) const {
  if (a < 0) throw std::domain_error("AlphaElem: negative alpha");
  RatQ r;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) r += c_[k] * RatQ(ZPolyQ::q_power(a * static_cast<int>(k)));
  return r;
}

std::string AlphaElem::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].to_string() + ")";
    if (k == 1) s += "*t";
    if (k > 1) s += "*t^" + std::to_string(k);
  }
  return s;
}

AlphaElem alpha_q() {
  AlphaElem r;
  ZPolyQ d = q_minus_1();
  r.set_coeff(1, RatQ(ZPolyQ(1), d));
  r.set_coeff(0, RatQ(ZPolyQ(-1), d));
  return r;
}

AlphaElem falling_formal(int k) {
  if (k < 0) throw std::domain_error("falling_formal: negative k");
  AlphaElem r = AlphaElem::one();
  ZPolyQ d = q_minus_1();
  for (int j = 0; j < k; ++j) {
    AlphaElem f;
    f.set_coeff(1, RatQ(ZPolyQ::q_power(-j), d));
    f.set_coeff(0, RatQ(ZPolyQ(-1), d));
    r *= f;
  }
  return r;
}

AlphaElem qbinom_formal(int k, int n) {
  if (n < 1) throw std::domain_error("qbinom_formal: n must be positive");
  AlphaElem num = AlphaElem::one();
  for (int i = 0; i < n; ++i) {
    AlphaElem f;
    f.set_coeff(1, RatQ(ZPolyQ::q_power(k - i)));
    f.set_coeff(0, RatQ(-1));
    num *= f;
  }
  ZPolyQ den = q_minus_1().pow(n) * qfact(n);
  return num.scaled(RatQ(ZPolyQ(1), den));
}

AlphaElem power_sum_Qalpha(int k) {
  if (k < 1) throw std::domain_error("power_sum_Qalpha: k must be positive");
  ZPolyQ d;
  d.add_term(1, k);
  d.add_term(-1, 0);
  AlphaElem r;
  r.set_coeff(k, RatQ(ZPolyQ(1), d));
  r.set_coeff(0, RatQ(ZPolyQ(-1), d));
  return r;
}

AlphaElem basis_element(AlphaBasis basis, int k, int n) {
  return basis == AlphaBasis::FallingFactorial ? falling_formal(k) : qbinom_formal(k, n);
}

bool AlphaExpansion::integral() const {
  for (const auto& c : coord)
    if (!c.is_laurent()) return false;
  return true;
}

bool AlphaExpansion::nonneg_integral() const {
  for (const auto& c : coord)
    if (!c.is_laurent() || !c.num().nonneg_coeffs()) return false;
  return true;
}

AlphaElem AlphaExpansion::synthesize() const {
  AlphaElem r;
  for (std::size_t i = 0; i < coord.size(); ++i)
    if (!coord[i].is_zero())
      r += basis_element(basis, static_cast<int>(i) + k_offset(), n).scaled(coord[i]);
  return r;
}

namespace {

// Inverse of the square system on t-degrees 1..n; any element of the span is
// determined by those coordinates since every basis element vanishes at t=1.
struct BasisSolver {
  int n;
  AlphaBasis basis;
  std::vector<std::vector<RatQ>> inv; // n x n

  BasisSolver(AlphaBasis b, int nn) : n(nn), basis(b) {
    std::vector<std::vector<RatQ>> m(static_cast<std::size_t>(n),
                                     std::vector<RatQ>(static_cast<std::size_t>(2 * n)));
    int off = b == AlphaBasis::FallingFactorial ? 1 : 0;
    for (int k = 0; k < n; ++k) {
      AlphaElem e = basis_element(b, k + off, n);
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = e.coeff(j + 1);
    }
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + j)] = RatQ(1);
    // Gauss-Jordan
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("alpha basis matrix singular");
      std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
      RatQ inv_piv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].reciprocal();
      for (int c = 0; c < 2 * n; ++c) m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] *= inv_piv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        RatQ f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int c = col; c < 2 * n; ++c)
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
              f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
    inv.assign(static_cast<std::size_t>(n), std::vector<RatQ>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)];
  }
};

const BasisSolver& solver_for(AlphaBasis basis, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<BasisSolver>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(static_cast<int>(basis), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<BasisSolver>(basis, n)).first;
  return *it->second;
}

} // namespace

AlphaExpansion alpha_to_basis(const AlphaElem& e, AlphaBasis basis, int n) {
  if (n < 1) throw std::domain_error("alpha_to_basis: n must be positive");
  const BasisSolver& s = solver_for(basis, n);
  AlphaExpansion out;
  out.basis = basis;
  out.n = n;
  out.coord.assign(static_cast<std::size_t>(n), RatQ());
  for (int r = 0; r < n; ++r) {
    RatQ acc;
    for (int c = 0; c < n; ++c) {
      const RatQ& m = s.inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!m.is_zero()) acc += m * e.coeff(c + 1);
    }
    out.coord[static_cast<std::size_t>(r)] = std::move(acc);
  }
  AlphaElem back = out.synthesize();
  if (back != e) throw NotInSpanError(e - back);
  return out;
}

} // namespace qchrom
