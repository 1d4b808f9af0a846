#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qchrom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::domain_error("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  c.resize(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

int Partition::multiplicity(int i) const {
  int m = 0;
  for (int p : parts_)
    if (p == i) ++m;
  return m;
}

BigInt Partition::z() const {
  BigInt z = 1;
  int run = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    ++run;
    z *= parts_[i];
    if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

bool Partition::dominates(const Partition& o) const {
  if (size_ != o.size_) throw std::domain_error("dominance needs equal size");
  long a = 0, b = 0;
  std::size_t n = std::max(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < o.parts_.size() ? o.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::domain_error("partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // depth-first with parts bounded above: yields reverse-lexicographic order
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace qchrom
