#pragma once

#include "zpolyq.hpp"

#include <vector>

namespace qchrom {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }           // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; } // 0-based
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  /// multiplicity of i among the parts.
  int multiplicity(int i) const;
  /// z_lambda = prod_i i^{m_i} m_i!.
  BigInt z() const;
  /// true when *this dominates o (requires equal size).
  bool dominates(const Partition& o) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; } // lex, for map keys

  std::string to_string() const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

/// Union of two partitions as multisets of parts.
Partition merge_parts(const Partition& a, const Partition& b);

BigInt factorial(int n);

} // namespace qchrom
