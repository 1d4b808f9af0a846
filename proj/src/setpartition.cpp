#include "setpartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchrom {

SetPartition::SetPartition(std::vector<int> rg) : rg_(std::move(rg)) {
  if (rg_.empty()) throw std::domain_error("SetPartition: empty");
  int mx = 0;
  for (std::size_t i = 0; i < rg_.size(); ++i) {
    if (rg_[i] < 1 || rg_[i] > mx + 1)
      throw std::domain_error("SetPartition: restricted-growth violation at position " +
                              std::to_string(i + 1));
    mx = std::max(mx, rg_[i]);
  }
  k_ = mx;
}

std::vector<std::vector<int>> SetPartition::parts() const {
  std::vector<std::vector<int>> p(static_cast<std::size_t>(k_));
  for (std::size_t i = 0; i < rg_.size(); ++i)
    p[static_cast<std::size_t>(rg_[i] - 1)].push_back(static_cast<int>(i) + 1);
  return p;
}

std::vector<int> SetPartition::coloring_word() const {
  std::vector<int> w(rg_.size());
  for (std::size_t i = 0; i < rg_.size(); ++i) w[i] = k_ + 1 - rg_[i];
  return w;
}

std::string SetPartition::rg_string() const {
  std::string s;
  for (int v : rg_) s += std::to_string(v);
  return s;
}

std::string SetPartition::to_string() const {
  std::string s;
  auto p = parts();
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) s += "|";
    for (int v : p[b]) s += std::to_string(v);
  }
  return s;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw std::domain_error("set_partitions: negative n");
  std::vector<SetPartition> out;
  if (n == 0) return out;
  std::vector<int> rg(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      out.emplace_back(rg);
      return;
    }
    for (int v = 1; v <= mx + 1; ++v) {
      rg[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rg[0] = 1;
  rec(rec, 1, 1);
  return out;
}

std::vector<SetPartition> set_partitions(int n, int k) {
  std::vector<SetPartition> out;
  for (auto& s : set_partitions(n))
    if (s.block_count() == k) out.push_back(std::move(s));
  return out;
}

} // namespace qchrom
