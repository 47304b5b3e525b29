#pragma once

// Bigrassmannian permutations: exactly one left descent and one right
// descent. They are parameterised by triples (i, j, k), i the left descent,
// j the right descent and 0 <= k <= min{i-1, j-1, n-1-i, n-1-j}.

#include <vector>

#include "bigrass/cells.hpp"
#include "bigrass/permutation.hpp"

namespace bigrass {

struct BigrassTriple {
  int n;
  int i;
  int j;
  int k;

  /// Throws std::invalid_argument when a bound is violated.
  void validate() const;
  friend auto operator<=>(const BigrassTriple&, const BigrassTriple&) = default;
};

bool is_bigrassmannian(const Permutation& w);

/// Reference enumeration: filter S_n by descent counts. Sorted
/// lexicographically. Requires 2 <= n <= 9.
std::vector<Permutation> enumerate_bigrassmannian(int n);

/// All valid triples for rank n, ordered by (i, j, k).
std::vector<BigrassTriple> bigrassmannian_triples(int n);

/// For i <= j, b(i,j,k) = (s_i ... s_{j+k})(s_{i-1} ... s_{j+k-1}) ... (s_{i-k} ... s_j);
/// for j < i, b(i,j,k) = b(j,i,k)^{-1}.
Permutation b_element(const BigrassTriple& t);

/// Inverse of b_element. Throws on non-bigrassmannian input.
BigrassTriple triple_of(const Permutation& w);

/// w_{i,j} where {i} and {j} are the left and right descents of w.
const CellElement& phi(const Permutation& w);

/// b(i,j,0) < b(i,j,1) < ... < b(i,j,d), d = d_value(n, i, j).
std::vector<Permutation> fiber(int n, int i, int j);

/// Bigrassmannian y with y <= x, ordered by triple.
std::vector<Permutation> below(const Permutation& x);
/// Bruhat-maximal elements of below(x), ordered by triple.
std::vector<Permutation> bruhat_maximal_below(const Permutation& x);

}  // namespace bigrass
