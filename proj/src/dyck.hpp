#pragma once

#include "setpartition.hpp"

#include <string>
#include <vector>

namespace qchrom {

/// Ferrers board with nondecreasing column heights 0 <= c_1 <= ... <= c_n <= n.
/// Cells use Cartesian (column, row) coordinates, row 1 at the bottom.
class FerrersBoard {
public:
  explicit FerrersBoard(std::vector<int> heights);
  int n() const { return static_cast<int>(c_.size()); }
  int height(int col) const { return c_[static_cast<std::size_t>(col - 1)]; } // 1-based
  const std::vector<int>& heights() const { return c_; }
  int cell_count() const;
  bool contains(int col, int row) const { return row >= 1 && row <= height(col); }
  bool operator==(const FerrersBoard& o) const { return c_ == o.c_; }
  std::string to_string() const;

private:
  std::vector<int> c_;
};

/// Dyck path encoded by its Hessenberg vector h(1..n) of column heights.
///
/// The order relation of the associated unit interval poset is
/// i <_pi j  iff  i < j and j > h(i); attacking pairs are the incomparable
/// ones, and they are the edges of the incomparability graph G(pi).
class DyckPath {
public:
  explicit DyckPath(std::vector<int> h);
  static DyckPath parse(const std::string& text); // "2,3,3" or step string "NNENNEENEE"

  int n() const { return static_cast<int>(h_.size()); }
  int h(int i) const { return h_[static_cast<std::size_t>(i - 1)]; } // 1-based
  const std::vector<int>& heights() const { return h_; }

  bool less(int i, int j) const;      // i <_pi j
  bool attacking(int i, int j) const; // unordered; requires i != j
  std::vector<std::pair<int, int>> edges() const; // attacking pairs (i < j), lex order

  int area() const;
  std::vector<int> a_vec() const; // per row from the top
  std::vector<int> b_vec() const; // per column from the right

  DyckPath reversed() const;
  /// restriction of the poset to A (1-based, ascending), relabeled.
  DyckPath induced(const std::vector<int>& a) const;

  std::string to_string() const; // "2,3,3"
  std::string steps() const;     // "NNE..." form

  bool operator==(const DyckPath& o) const { return h_ == o.h_; }
  bool operator!=(const DyckPath& o) const { return !(*this == o); }
  bool operator<(const DyckPath& o) const { return h_ < o.h_; }

private:
  std::vector<int> h_;
};

/// All n-Dyck paths (Catalan many), lexicographic in the Hessenberg vector.
std::vector<DyckPath> all_paths(int n);

/// Remove the edges of G(pi) joining differently colored vertices, then
/// renumber vertices by a stable sort on color. The result is the disjoint
/// ordered union of the induced subpaths on the color classes.
DyckPath beta_word(const DyckPath& pi, const std::vector<int>& w);
DyckPath beta_setpartition(const DyckPath& pi, const SetPartition& s);

/// Bounce path of a composition: the disjoint ordered union of complete graphs.
DyckPath bounce_path(const std::vector<int>& composition);

/// B_pi = B(c_1,...,c_n) with c_i = i - 1 - b_i(pi).
FerrersBoard board_from_dyck(const DyckPath& pi);

} // namespace qchrom
