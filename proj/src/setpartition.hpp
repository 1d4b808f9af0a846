#pragma once

#include <string>
#include <vector>

namespace qchrom {

/// Set partition of [n], stored as a restricted-growth string.
class SetPartition {
public:
  explicit SetPartition(std::vector<int> rg); // rg values 1-based, RG property enforced

  int n() const { return static_cast<int>(rg_.size()); }
  int block_count() const { return k_; }
  const std::vector<int>& rg() const { return rg_; }

  /// parts listed by ascending minimum element (the RG block order).
  std::vector<std::vector<int>> parts() const;
  /// coloring word for beta: the part with the largest minimum gets color 1,
  /// so its vertices land in the leading block of the resulting path.
  std::vector<int> coloring_word() const;

  std::string rg_string() const;   // e.g. "112"
  std::string to_string() const;   // e.g. "12|3"

  bool operator==(const SetPartition& o) const { return rg_ == o.rg_; }

private:
  std::vector<int> rg_;
  int k_ = 0;
};

/// All set partitions of [n], RG-string lexicographic.
std::vector<SetPartition> set_partitions(int n);
/// Those with exactly k parts, same order.
std::vector<SetPartition> set_partitions(int n, int k);

} // namespace qchrom
