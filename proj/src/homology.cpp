#include "bigrass/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bigrass/fulton.hpp"

namespace bigrass {

namespace {

void require_cell_rank(int n) {
  if (n < 3) throw std::invalid_argument("requires n >= 3, got " + std::to_string(n));
}

std::vector<GradedSimple> images(const std::vector<Permutation>& ys) {
  std::vector<GradedSimple> out;
  out.reserve(ys.size());
  for (const auto& y : ys) out.push_back(bijection_image(y));
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

bool contains(const std::vector<Permutation>& set, const Permutation& y) {
  return std::find(set.begin(), set.end(), y) != set.end();
}

}  // namespace

bool graded_less(const GradedSimple& a, const GradedSimple& b) {
  if (a.i() != b.i()) return a.i() < b.i();
  if (a.j() != b.j()) return a.j() < b.j();
  return a.shift < b.shift;
}

WallSet::WallSet(int n, std::vector<int> walls) : n_(n), walls_(std::move(walls)) {
  std::sort(walls_.begin(), walls_.end());
  walls_.erase(std::unique(walls_.begin(), walls_.end()), walls_.end());
  for (int i : walls_) {
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("wall s" + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    }
  }
}

WallSet WallSet::all(int n) {
  std::vector<int> walls;
  for (int i = 1; i < n; ++i) walls.push_back(i);
  return WallSet(n, std::move(walls));
}

bool WallSet::contains(int i) const { return std::binary_search(walls_.begin(), walls_.end(), i); }

Permutation parabolic_longest(const WallSet& walls) {
  // Reverse every maximal run of consecutive generators.
  std::vector<int> word = Permutation::identity(walls.rank()).one_line();
  const auto& I = walls.walls();
  for (std::size_t a = 0; a < I.size();) {
    std::size_t b = a;
    while (b + 1 < I.size() && I[b + 1] == I[b] + 1) ++b;
    std::reverse(word.begin() + (I[a] - 1), word.begin() + (I[b] + 1));
    a = b + 1;
  }
  return Permutation(word);
}

Permutation coset_representative(const Permutation& w, const WallSet& walls, CosetKind kind) {
  if (w.rank() != walls.rank()) throw std::invalid_argument("wall set rank mismatch");
  Permutation shortest = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : walls.walls()) {
      if (is_descent(shortest, i, Side::right)) {
        shortest = shortest.times_simple(i, Side::right);
        changed = true;
      }
    }
  }
  if (kind == CosetKind::shortest) return shortest;
  return compose(shortest, parabolic_longest(walls));
}

GradedSimple bijection_image(const BigrassTriple& t) {
  t.validate();
  require_cell_rank(t.n);
  return {cell_element(t.n, t.i, t.j), cell_base_degree(t.n) + std::abs(t.i - t.j) + 2 * t.k};
}

GradedSimple bijection_image(const Permutation& y) { return bijection_image(triple_of(y)); }

std::vector<GradedSimple> j_subquotients(const Permutation& w) {
  require_cell_rank(w.rank());
  return images(below(w));
}

std::vector<GradedSimple> socle_graded(const Permutation& w) {
  const int n = w.rank();
  require_cell_rank(n);
  std::vector<GradedSimple> out;
  for (const auto& e : essential_set(w)) {
    out.push_back({cell_element(n, e.col, e.row),
                   cell_base_degree(n) + std::abs(e.row - e.col) + 2 * (e.corank - 1)});
  }
  return out;
}

std::vector<GradedSimple> socle_graded_via_maximal(const Permutation& w) {
  require_cell_rank(w.rank());
  return images(bruhat_maximal_below(w));
}

std::vector<CellElement> socle_ungraded(const Permutation& w) {
  std::vector<CellElement> out;
  for (const auto& g : socle_graded(w)) out.push_back(g.cell);
  return out;
}

std::vector<GradedSimple> socle_between(const Permutation& v, const Permutation& w) {
  require_same_rank(v, w);
  require_cell_rank(w.rank());
  if (v == w || !bruhat_leq(v, w)) throw std::invalid_argument("socle_between requires v < w");
  const auto bm_v = bruhat_maximal_below(v);
  std::vector<Permutation> keep;
  for (const auto& y : bruhat_maximal_below(w)) {
    if (!contains(bm_v, y)) keep.push_back(y);
  }
  return images(keep);
}

std::vector<GradedSimple> j_subquotients_between(const Permutation& v, const Permutation& w) {
  require_same_rank(v, w);
  require_cell_rank(w.rank());
  if (v == w || !bruhat_leq(v, w)) throw std::invalid_argument("j_subquotients_between requires v < w");
  std::vector<Permutation> keep;
  for (const auto& y : below(w)) {
    if (!bruhat_leq(y, v)) keep.push_back(y);
  }
  return images(keep);
}

int ext1_dimension(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  require_cell_rank(x.rank());
  if (x == Permutation::longest(x.rank())) return content(compose(x, y));
  for (const auto& b : bruhat_maximal_below(y)) {
    if (phi(b).perm == x) return 1;
  }
  return 0;
}

int ext1_dimension_singular(const Permutation& x, const Permutation& y, const WallSet& walls) {
  require_same_rank(x, y);
  require_cell_rank(x.rank());
  const Permutation top = coset_representative(x, walls, CosetKind::longest);
  const Permutation bottom = coset_representative(y, walls, CosetKind::shortest);
  if (top == Permutation::longest(x.rank())) {
    return content(compose(top, bottom)) - static_cast<int>(walls.size());
  }
  for (const auto& b : bruhat_maximal_below(bottom)) {
    if (phi(b).perm == top) return 1;
  }
  return 0;
}

std::vector<CellElement> socle_singular_labels(const Permutation& x, const Permutation& y,
                                               const WallSet& walls) {
  require_same_rank(x, y);
  require_cell_rank(x.rank());
  if (x == y || !bruhat_leq(x, y)) throw std::invalid_argument("socle_singular_labels requires x < y");
  const Permutation xs = coset_representative(x, walls, CosetKind::shortest);
  const Permutation ys = coset_representative(y, walls, CosetKind::shortest);
  std::vector<CellElement> out;
  if (xs == ys) return out;
  for (const auto& g : socle_between(xs, ys)) {
    if (coset_representative(g.cell.perm, walls, CosetKind::longest) == g.cell.perm) {
      out.push_back(g.cell);
    }
  }
  return out;
}

}  // namespace bigrass
