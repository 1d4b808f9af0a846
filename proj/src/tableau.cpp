#include "tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qchrom {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::domain_error("Tableau: row count does not match shape");
  for (int r = 0; r < shape_.length(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape_.part(r))
      throw std::domain_error("Tableau: row length does not match shape");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw std::domain_error("Tableau: entries must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw std::domain_error("Tableau: rows must weakly increase");
      if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][c] >= row[c])
        throw std::domain_error("Tableau: columns must strictly increase");
    }
  }
  std::vector<int> w = weight();
  standard_ = static_cast<int>(w.size()) == shape_.size() &&
              std::all_of(w.begin(), w.end(), [](int m) { return m == 1; });
}

std::vector<int> Tableau::weight() const {
  int mx = 0;
  for (const auto& row : rows_)
    for (int v : row) mx = std::max(mx, v);
  std::vector<int> w(static_cast<std::size_t>(mx), 0);
  for (const auto& row : rows_)
    for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<Tableau> syt(const Partition& shape) {
  std::vector<Tableau> out;
  int n = shape.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  for (int r = 0; r < shape.length(); ++r) rows[static_cast<std::size_t>(r)].clear();
  std::vector<int> rowlen(static_cast<std::size_t>(shape.length()), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      std::vector<std::vector<int>> filled = rows;
      out.emplace_back(shape, std::move(filled));
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int len = rowlen[static_cast<std::size_t>(r)];
      if (len >= shape.part(r)) continue;
      if (r > 0 && rowlen[static_cast<std::size_t>(r - 1)] <= len) continue;
      rows[static_cast<std::size_t>(r)].push_back(k);
      ++rowlen[static_cast<std::size_t>(r)];
      self(self, k + 1);
      --rowlen[static_cast<std::size_t>(r)];
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

std::vector<int> entry_rows(const Tableau& t) {
  if (!t.is_standard()) throw std::domain_error("statistic requires a standard tableau");
  std::vector<int> row(static_cast<std::size_t>(t.shape().size()) + 1, 0);
  for (int r = 0; r < t.shape().length(); ++r)
    for (int c = 0; c < t.shape().part(r); ++c)
      row[static_cast<std::size_t>(t.entry(r, c))] = r;
  return row;
}

} // namespace

int tableau_descents(const Tableau& t) {
  std::vector<int> row = entry_rows(t);
  int d = 0;
  for (int i = 1; i < t.shape().size(); ++i)
    if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) ++d;
  return d;
}

int tableau_maj(const Tableau& t) {
  std::vector<int> row = entry_rows(t);
  int m = 0;
  for (int i = 1; i < t.shape().size(); ++i)
    if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) m += i;
  return m;
}

int charge(const Tableau& t) {
  if (!t.is_standard()) throw std::domain_error("charge requires a standard tableau");
  std::vector<int> w = t.reading_word();
  int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  int idx = 0, total = 0;
  for (int k = 2; k <= n; ++k) {
    if (pos[static_cast<std::size_t>(k)] > pos[static_cast<std::size_t>(k - 1)]) ++idx;
    total += idx;
  }
  return total;
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::domain_error("kostka: size mismatch");
  // add horizontal strips letter by letter
  std::map<std::vector<int>, BigInt> cur;
  cur[std::vector<int>(static_cast<std::size_t>(lambda.length()), 0)] = 1;
  for (int i = 0; i < mu.length(); ++i) {
    int strip = mu.part(i);
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [nu, cnt] : cur) {
      // enumerate nu' with nu ⊆ nu' ⊆ lambda, |nu'/nu| = strip, nu'/nu horizontal
      std::vector<int> np(nu);
      auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row == lambda.length()) {
          if (rem == 0) next[np] += cnt;
          return;
        }
        std::size_t r = static_cast<std::size_t>(row);
        int lo = nu[r];
        int hi = std::min(lambda.part(row), row == 0 ? lambda.part(0) : nu[r - 1]);
        if (row > 0 && np[r - 1] < lo) return; // keep partition shape
        for (int v = lo; v <= hi && v - lo <= rem; ++v) {
          if (row > 0 && v > np[r - 1]) break;
          np[r] = v;
          self(self, row + 1, rem - (v - lo));
          np[r] = lo;
        }
      };
      rec(rec, 0, strip);
    }
    cur = std::move(next);
  }
  std::vector<int> full(lambda.parts().begin(), lambda.parts().end());
  auto it = cur.find(full);
  return it == cur.end() ? BigInt(0) : it->second;
}

namespace {

BigInt mn_rec(std::vector<int> beta, const std::vector<int>& mu, std::size_t idx,
              std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  // beta: strictly decreasing beta-numbers of the remaining shape
  if (idx == mu.size()) return 1;
  auto key = std::make_pair(beta, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int m = mu[idx];
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int nb = beta[i] - m;
    if (nb < 0) continue;
    bool clash = false;
    int crossings = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == nb) {
        clash = true;
        break;
      }
      if (beta[j] < beta[i] && beta[j] > nb) ++crossings;
    }
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    BigInt sub = mn_rec(std::move(nbeta), mu, idx + 1, memo);
    if (crossings % 2)
      total -= sub;
    else
      total += sub;
  }
  memo[key] = total;
  return total;
}

} // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::domain_error("mn_character: size mismatch");
  if (lambda.size() == 0) return 1;
  int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  static std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_unused; // per-call memo below
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  return mn_rec(std::move(beta), lambda.size() ? mu.parts() : std::vector<int>{}, 0, memo);
}

} // namespace qchrom
