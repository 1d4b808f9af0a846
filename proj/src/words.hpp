#pragma once

#include "partition.hpp"

#include <functional>
#include <vector>

namespace qchrom {

/// sorted (weakly decreasing) content of a word over positive integers.
Partition word_content(const std::vector<int>& w);

/// M(lambda): all words where letter i occurs lambda_i times, lexicographic.
std::vector<std::vector<int>> words_of_weight(const Partition& lambda);
void for_each_word(const Partition& lambda, const std::function<void(const std::vector<int>&)>& f);

/// Restartable enumeration of S_n in lexicographic one-line order.
class PermRange {
public:
  explicit PermRange(int n) : n_(n) {}
  class iterator {
  public:
    iterator() = default;
    iterator(int n, bool end);
    const std::vector<int>& operator*() const { return p_; }
    iterator& operator++();
    bool operator!=(const iterator& o) const { return done_ != o.done_; }
  private:
    std::vector<int> p_;
    bool done_ = true;
  };
  iterator begin() const { return iterator(n_, false); }
  iterator end() const { return iterator(n_, true); }
private:
  int n_;
};

void for_each_perm(int n, const std::function<void(const std::vector<int>&)>& f);

std::vector<int> inverse_perm(const std::vector<int>& p);

} // namespace qchrom
