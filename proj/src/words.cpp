#include "words.hpp"

#include <algorithm>
#include <numeric>

namespace qchrom {

Partition word_content(const std::vector<int>& w) {
  int mx = 0;
  for (int v : w) mx = std::max(mx, v);
  std::vector<int> cnt(static_cast<std::size_t>(mx), 0);
  for (int v : w) ++cnt[static_cast<std::size_t>(v - 1)];
  std::sort(cnt.rbegin(), cnt.rend());
  while (!cnt.empty() && cnt.back() == 0) cnt.pop_back();
  return Partition(std::move(cnt));
}

std::vector<std::vector<int>> words_of_weight(const Partition& lambda) {
  std::vector<std::vector<int>> out;
  for_each_word(lambda, [&](const std::vector<int>& w) { out.push_back(w); });
  return out;
}

void for_each_word(const Partition& lambda, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) w.push_back(i + 1);
  std::sort(w.begin(), w.end());
  do {
    f(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

PermRange::iterator::iterator(int n, bool end) : done_(end) {
  if (!end) {
    p_.resize(static_cast<std::size_t>(n));
    std::iota(p_.begin(), p_.end(), 1);
    if (n == 0) done_ = true;
  }
}

PermRange::iterator& PermRange::iterator::operator++() {
  if (!std::next_permutation(p_.begin(), p_.end())) done_ = true;
  return *this;
}

void for_each_perm(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

} // namespace qchrom
