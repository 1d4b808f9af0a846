#pragma once

#include "partition.hpp"

namespace qchrom {

/// Young tableau in English notation (row 0 on top).
class Tableau {
public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int entry(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool is_standard() const { return standard_; }
  std::vector<int> weight() const;
  /// reading word: bottom row to top, left to right within rows.
  std::vector<int> reading_word() const;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  bool standard_ = false;
};

std::vector<Tableau> syt(const Partition& shape);

/// d(T): number of i whose successor i+1 sits in a strictly lower row.
int tableau_descents(const Tableau& t);
/// maj(T): sum of those i.
int tableau_maj(const Tableau& t);
/// Lascoux-Schutzenberger charge of the reading word of a standard tableau.
int charge(const Tableau& t);

/// Kostka number: semistandard tableaux of shape lambda and weight mu.
BigInt kostka(const Partition& lambda, const Partition& mu);

/// Irreducible character chi^lambda(mu) by the Murnaghan-Nakayama rule.
BigInt mn_character(const Partition& lambda, const Partition& mu);

} // namespace qchrom
