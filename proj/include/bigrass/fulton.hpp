#pragma once

// Permutation diagrams, Fulton essential sets and rank/co-rank functions.
// All coordinates are matrix coordinates: row i counts downward, column j
// rightward, both 1-based. The graph of w consists of the points (i, w(i)).

#include <string>
#include <utility>
#include <vector>

#include "bigrass/permutation.hpp"

namespace bigrass {

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct EssentialCell {
  int row;
  int col;
  int corank;
  friend auto operator<=>(const EssentialCell&, const EssentialCell&) = default;
};

/// r_w(i,j) = #{k <= i : w(k) <= j} and t_w(i,j) = min(i,j) - r_w(i,j)
/// for 1 <= i,j <= n.
class RankTable {
 public:
  explicit RankTable(const Permutation& w);

  int rank() const { return n_; }
  int r(int i, int j) const { return r_[index(i, j)]; }
  int t(int i, int j) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_;
  std::vector<int> r_;
};

RankTable rank_table(const Permutation& w);

/// Cells (i,j) with j < w(i) and i < w^{-1}(j), row-major.
std::vector<Cell> diagram(const Permutation& w);

/// Ess(w) in row-major order, each cell carrying t_w(i,j).
std::vector<EssentialCell> essential_set(const Permutation& w);

/// t_u <= t_w pointwise. Equivalent to u <= w in Bruhat order.
bool corank_dominates(const Permutation& u, const Permutation& w);

/// ASCII picture: "o" graph point, "x" diagram cell, "[x]" essential cell,
/// "." elsewhere. One line per row, cells three characters wide.
std::string render_diagram(const Permutation& w);

}  // namespace bigrass
