#pragma once

#include "dyck.hpp"
#include "zpolyq.hpp"

#include <functional>
#include <vector>

namespace qchrom {

/// Nonattacking rook placement: cells in Cartesian (column, row) coordinates,
/// pairwise distinct columns and rows, inside an ambient n x n grid.
struct RookPlacement {
  int n = 0;
  std::vector<std::pair<int, int>> cells;
};

/// k-rook placements on the board, visited in column-recursive order.
void for_each_placement(const FerrersBoard& b, int k,
                        const std::function<void(const RookPlacement&)>& f);

/// Garsia-Remmel statistic: cells of B left after each rook cancels the cells
/// weakly to its right in its row and strictly below it in its column.
int inv_B(const FerrersBoard& b, const RookPlacement& c);

/// r_k(B;q); k = 0 gives q^{|B|}.
ZPolyQ r_poly(const FerrersBoard& b, int k);

/// q-hit polynomials h_0..h_n from the defining identity
/// sum_k [k]_q! r_{n-k}(B;q) prod_{i=k+1..n} (x - q^i) = sum_j h_j(B;q) x^j.
std::vector<ZPolyQ> hit_algebraic(const FerrersBoard& b);

/// Torus statistic on a full placement: cancel cells strictly right of each
/// rook in its row; on-board rooks count uncancelled board cells above them,
/// off-board rooks count uncancelled cells up to the grid top, then wrap to
/// the bottom and continue to the top of the column of B.
int haglund_stat(const FerrersBoard& b, const RookPlacement& full);

/// q-hit polynomial realized by the torus statistic (k rooks on B).
ZPolyQ hit_stat_route(const FerrersBoard& b, int k);

/// Riordan cycle map: right-to-left minima close the cycles of sigma; a rook
/// sits at (column j, row i) whenever i immediately follows j in a cycle.
/// The placement hits B of the reversed path exactly |PDes_pi(sigma)| times.
RookPlacement riordan_map(const std::vector<int>& sigma);

/// P-descent hit statistic
/// inv_pi(sigma^{-1}) + n(n-1) - n|PDes| - sum of positions outside PDes.
int hitstat(const DyckPath& pi, const std::vector<int>& sigma);

/// New q-hit solution: q^{-area(pi)} sum over sigma with |PDes| = k of
/// q^{hitstat}; agrees with hit_algebraic(B_pi). The area normalization is
/// forced by chi_pi[Q_alpha;q] = q^{area} PR(B_pi).
ZPolyQ new_hit_poly(const DyckPath& pi, int k);

struct BoardReduction {
  int forced_hits = 0;  // J
  FerrersBoard reduced; // below the diagonal; h_k(B) = h_{k-J}(reduced)
};

/// Reduce an arbitrary Ferrers board in [n]x[n] to one below the diagonal by
/// rearranging the value multiset c_i - i + 1 and lowering all columns by J.
BoardReduction board_reduce(const FerrersBoard& b);

/// all Ferrers boards inside [n] x [n].
std::vector<FerrersBoard> all_ferrers_boards(int n);
/// those below the diagonal (c_i <= i - 1).
std::vector<FerrersBoard> subdiagonal_boards(int n);

} // namespace qchrom
