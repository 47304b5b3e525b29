#pragma once

// The penultimate two-sided cell J of S_n: the Robinson-Schensted fiber over
// the hook (2, 1^{n-2}). For every pair (i, j) it contains exactly one
// element w_{i,j} whose only left ascent is i and only right ascent is j.

#include <vector>

#include "bigrass/laurent.hpp"
#include "bigrass/permutation.hpp"

namespace bigrass {

struct CellElement {
  int n;
  int i;  // unique left ascent
  int j;  // unique right ascent
  Permutation perm;

  friend bool operator==(const CellElement&, const CellElement&) = default;
};

/// (n-1)(n-2)/2: the minimal degree of a J-subquotient of the dominant
/// Verma module, equal to length(w_{1,1}).
int cell_base_degree(int n);

/// All (n-1)^2 elements ordered by (i, j). Requires 3 <= n <= 9; results
/// are computed once per rank and shared.
const std::vector<CellElement>& penultimate_cell(int n);

/// w_{i,j}; throws std::invalid_argument when (i, j) is outside 1..n-1.
const CellElement& cell_element(int n, int i, int j);

/// min{i-1, j-1, n-1-i, n-1-j}.
int d_value(int n, int i, int j);

/// p_{e,w_{i,j}} = v^l + v^{l-2} + ... + v^{l-2d} with l = length(w_{i,j}).
LaurentPolynomial closed_form_p(int n, int i, int j);

/// Covering relation in either direction. Undirected.
bool cell_bruhat_adjacent(const CellElement& a, const CellElement& b);

}  // namespace bigrass
