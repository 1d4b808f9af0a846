#include "rook.hpp"

#include "chromatic.hpp"
#include "words.hpp"

#include <algorithm>
#include <numeric>

namespace qchrom {

void for_each_placement(const FerrersBoard& b, int k,
                        const std::function<void(const RookPlacement&)>& f) {
  int n = b.n();
  if (k < 0 || k > n) throw std::domain_error("for_each_placement: k out of range");
  RookPlacement p;
  p.n = n;
  std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int col, int left) -> void {
    if (left == 0) {
      f(p);
      return;
    }
    if (col > n || n - col + 1 < left) return;
    self(self, col + 1, left); // no rook in this column
    for (int row = 1; row <= b.height(col); ++row) {
      if (row_used[static_cast<std::size_t>(row)]) continue;
      row_used[static_cast<std::size_t>(row)] = true;
      p.cells.emplace_back(col, row);
      self(self, col + 1, left - 1);
      p.cells.pop_back();
      row_used[static_cast<std::size_t>(row)] = false;
    }
  };
  rec(rec, 1, k);
}

int inv_B(const FerrersBoard& b, const RookPlacement& c) {
  int n = b.n();
  std::vector<std::vector<bool>> gone(static_cast<std::size_t>(n) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (const auto& [col, row] : c.cells) {
    for (int c2 = col; c2 <= n; ++c2) gone[static_cast<std::size_t>(c2)][static_cast<std::size_t>(row)] = true;
    for (int r2 = 1; r2 < row; ++r2) gone[static_cast<std::size_t>(col)][static_cast<std::size_t>(r2)] = true;
  }
  int left = 0;
  for (int col = 1; col <= n; ++col)
    for (int row = 1; row <= b.height(col); ++row)
      if (!gone[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]) ++left;
  return left;
}

ZPolyQ r_poly(const FerrersBoard& b, int k) {
  ZPolyQ out;
  for_each_placement(b, k, [&](const RookPlacement& p) { out.add_term(1, inv_B(b, p)); });
  return out;
}

std::vector<ZPolyQ> hit_algebraic(const FerrersBoard& b) {
  int n = b.n();
  // x-polynomial with ZPolyQ coefficients, index = power of x
  std::vector<ZPolyQ> total(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    ZPolyQ scalar = qfact(k) * r_poly(b, n - k);
    if (scalar.is_zero()) continue;
    std::vector<ZPolyQ> prod(1, scalar);
    for (int i = k + 1; i <= n; ++i) {
      std::vector<ZPolyQ> next(prod.size() + 1);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        if (prod[d].is_zero()) continue;
        next[d + 1] += prod[d];
        next[d] -= prod[d].shifted(i);
      }
      prod = std::move(next);
    }
    for (std::size_t d = 0; d < prod.size(); ++d) total[d] += prod[d];
  }
  return total;
}

int haglund_stat(const FerrersBoard& b, const RookPlacement& full) {
  int n = b.n();
  if (static_cast<int>(full.cells.size()) != n)
    throw std::domain_error("haglund_stat: needs a full n-rook placement");
  std::vector<std::vector<bool>> gone(static_cast<std::size_t>(n) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (const auto& [col, row] : full.cells)
    for (int c2 = col + 1; c2 <= n; ++c2) gone[static_cast<std::size_t>(c2)][static_cast<std::size_t>(row)] = true;
  int stat = 0;
  for (const auto& [col, row] : full.cells) {
    if (row <= b.height(col)) {
      for (int r2 = row + 1; r2 <= b.height(col); ++r2)
        if (!gone[static_cast<std::size_t>(col)][static_cast<std::size_t>(r2)]) ++stat;
    } else {
      for (int r2 = row + 1; r2 <= n; ++r2)
        if (!gone[static_cast<std::size_t>(col)][static_cast<std::size_t>(r2)]) ++stat;
      for (int r2 = 1; r2 <= b.height(col); ++r2)
        if (!gone[static_cast<std::size_t>(col)][static_cast<std::size_t>(r2)]) ++stat;
    }
  }
  return stat;
}

ZPolyQ hit_stat_route(const FerrersBoard& b, int k) {
  int n = b.n();
  ZPolyQ out;
  for_each_perm(n, [&](const std::vector<int>& sigma) {
    RookPlacement p;
    p.n = n;
    int hits = 0;
    for (int col = 1; col <= n; ++col) {
      int row = sigma[static_cast<std::size_t>(col - 1)];
      p.cells.emplace_back(col, row);
      if (row <= b.height(col)) ++hits;
    }
    if (hits == k) out.add_term(1, haglund_stat(b, p));
  });
  return out;
}

RookPlacement riordan_map(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  RookPlacement p;
  p.n = n;
  // split one-line form into cycles ending at the right-to-left minima
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1, n + 1);
  for (int i = n - 1; i >= 0; --i)
    suffix_min[static_cast<std::size_t>(i)] =
        std::min(suffix_min[static_cast<std::size_t>(i + 1)], sigma[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    cur.push_back(sigma[static_cast<std::size_t>(i)]);
    if (sigma[static_cast<std::size_t>(i)] < suffix_min[static_cast<std::size_t>(i + 1)]) {
      cycles.push_back(cur);
      cur.clear();
    }
  }
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int j = cyc[i];
      int next = cyc[(i + 1) % cyc.size()];
      p.cells.emplace_back(j, next); // (column j, row i) with i following j
    }
  }
  std::sort(p.cells.begin(), p.cells.end());
  return p;
}

int hitstat(const DyckPath& pi, const std::vector<int>& sigma) {
  int n = pi.n();
  std::vector<int> d = pdes(pi, sigma);
  int sum_out = 0;
  std::vector<bool> in_d(static_cast<std::size_t>(n), false);
  for (int i : d) in_d[static_cast<std::size_t>(i)] = true;
  for (int i = 1; i <= n - 1; ++i)
    if (!in_d[static_cast<std::size_t>(i)]) sum_out += i;
  return inv_pi(pi, inverse_perm(sigma)) + n * (n - 1) - n * static_cast<int>(d.size()) - sum_out;
}

ZPolyQ new_hit_poly(const DyckPath& pi, int k) {
  int n = pi.n();
  ZPolyQ out;
  for_each_perm(n, [&](const std::vector<int>& sigma) {
    if (static_cast<int>(pdes(pi, sigma).size()) == k) out.add_term(1, hitstat(pi, sigma));
  });
  return out.shifted(-pi.area());
}

BoardReduction board_reduce(const FerrersBoard& b) {
  int n = b.n();
  std::vector<int> vals(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vals[static_cast<std::size_t>(i - 1)] = b.height(i) - i + 1;
  std::sort(vals.rbegin(), vals.rend());
  for (int i = 0; i + 1 < n; ++i)
    if (vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(i + 1)] > 1)
      throw std::logic_error("board_reduce: value multiset not a rook-product multiset");
  int j = std::max(vals[0], 0);
  std::vector<int> heights(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) heights[static_cast<std::size_t>(i - 1)] = vals[static_cast<std::size_t>(i - 1)] + i - 1 - j;
  return BoardReduction{j, FerrersBoard(std::move(heights))};
}

std::vector<FerrersBoard> all_ferrers_boards(int n) {
  std::vector<FerrersBoard> out;
  std::vector<int> c(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      out.emplace_back(c);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<FerrersBoard> subdiagonal_boards(int n) {
  std::vector<FerrersBoard> out;
  for (const auto& b : all_ferrers_boards(n)) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      if (b.height(i) > i - 1) ok = false;
    if (ok) out.push_back(b);
  }
  return out;
}

} // namespace qchrom
