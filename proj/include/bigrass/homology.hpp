#pragma once

// Socles of cokernels of Verma module inclusions in the principal block of
// category O for sl_n, and first extensions from simples to Vermas, as
// combinatorial formulas over S_n.
//
// Grading convention: the dominant Verma module Delta_e has its top in
// degree 0. A graded simple L_{w_{i,j}}<-k> is recorded as the point
// (i, j, k) with k >= 0; these points form the tetrahedron
//
//   { (i, j, k) : v^k occurs in p_{e, w_{i,j}} }.
//
// socle_graded(w) describes the socle of Delta_e / (Delta_w<-length(w)>),
// i.e. Delta_w shifted so that the inclusion is homogeneous of degree 0.

#include <optional>
#include <string_view>
#include <vector>

#include "bigrass/bigrassmannian.hpp"
#include "bigrass/cells.hpp"
#include "bigrass/permutation.hpp"

namespace bigrass {

/// L_{w_{i,j}}<-shift>.
struct GradedSimple {
  CellElement cell;
  int shift;

  int i() const { return cell.i; }
  int j() const { return cell.j; }
  friend bool operator==(const GradedSimple&, const GradedSimple&) = default;
};

/// Orders by (i, j, shift).
bool graded_less(const GradedSimple& a, const GradedSimple& b);

/// Simple reflections fixing a singular dominant weight under the dot action.
class WallSet {
 public:
  /// Sorted, duplicate-free; throws std::invalid_argument outside 1..n-1.
  WallSet(int n, std::vector<int> walls);
  static WallSet none(int n) { return WallSet(n, {}); }
  static WallSet all(int n);

  int rank() const { return n_; }
  const std::vector<int>& walls() const { return walls_; }
  std::size_t size() const { return walls_.size(); }
  bool contains(int i) const;

 private:
  int n_;
  std::vector<int> walls_;
};

enum class CosetKind { shortest, longest };

/// Shortest or longest element of the coset w S_I.
Permutation coset_representative(const Permutation& w, const WallSet& walls, CosetKind kind);

/// Longest element of the parabolic subgroup S_I.
Permutation parabolic_longest(const WallSet& walls);

/// b(i,j,k) -> L_{w_{i,j}}<-((n-1)(n-2)/2 + |i-j| + 2k)>.
GradedSimple bijection_image(const BigrassTriple& t);
/// bijection_image(triple_of(y)) for bigrassmannian y.
GradedSimple bijection_image(const Permutation& y);

/// J-composition factors of Delta_e/Delta_w: images of every bigrassmannian
/// y <= w. Multiplicity free; ordered by (i, j, shift).
std::vector<GradedSimple> j_subquotients(const Permutation& w);

/// Graded socle from the essential set: each (i,j) in Ess(w) gives
/// L_{w_{j,i}}<-((n-1)(n-2)/2 + |i-j| + 2(t_w(i,j) - 1))>. Ordered like
/// essential_set(w), i.e. row-major in (i,j).
std::vector<GradedSimple> socle_graded(const Permutation& w);

/// The same socle computed as images of the Bruhat-maximal bigrassmannians
/// below w. Ordered by (i, j, shift).
std::vector<GradedSimple> socle_graded_via_maximal(const Permutation& w);

/// socle_graded with shifts dropped.
std::vector<CellElement> socle_ungraded(const Permutation& w);

/// Socle of Delta_v/Delta_w for v < w: images of BM(w) \ BM(v).
/// Throws std::invalid_argument unless v < w.
std::vector<GradedSimple> socle_between(const Permutation& v, const Permutation& w);
/// J-factors of Delta_v/Delta_w: images of y <= w with y not <= v.
std::vector<GradedSimple> j_subquotients_between(const Permutation& v, const Permutation& w);

/// dim Ext^1(L_x, Delta_y) = dim Ext^1(nabla_y, L_x):
///   content(x y)  if x = w_0,
///   1             if x = phi(b) for some b in BM(y),
///   0             otherwise.
/// Requires n >= 3.
int ext1_dimension(const Permutation& x, const Permutation& y);

/// Singular-block version for the dominant weight with stabiliser S_I:
/// with xb the longest representative of x S_I and ys the shortest of y S_I,
///   content(xb ys) - |I|  if xb = w_0,
///   1                     if xb = phi(b) for some b in BM(ys),
///   0                     otherwise.
int ext1_dimension_singular(const Permutation& x, const Permutation& y, const WallSet& walls);

/// Labels of the socle of Delta(x.mu)/Delta(y.mu) for x < y: the regular
/// socle between the shortest representatives, keeping only labels that are
/// longest coset representatives. Grading shifts are not provided.
std::vector<CellElement> socle_singular_labels(const Permutation& x, const Permutation& y,
                                               const WallSet& walls);

}  // namespace bigrass
