#include "bigrass/cells.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bigrass {

namespace {

constexpr int kMinCellRank = 3;
constexpr int kMaxCellRank = 9;

void check_indices(int n, int i, int j) {
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1) {
    throw std::invalid_argument("cell index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1.." + std::to_string(n - 1));
  }
}

std::vector<CellElement> enumerate_cell(int n) {
  YoungShape hook;
  hook.parts.push_back(2);
  hook.parts.insert(hook.parts.end(), static_cast<std::size_t>(n - 2), 1);

  std::vector<CellElement> found;
  for (const auto& w : all_permutations(n)) {
    if (rs_shape(w) != hook) continue;
    const auto left = ascents(w, Side::left);
    const auto right = ascents(w, Side::right);
    if (left.size() != 1 || right.size() != 1) {
      throw std::logic_error("hook-shaped permutation without a unique ascent pair");
    }
    found.push_back({n, left.front(), right.front(), w});
  }
  std::sort(found.begin(), found.end(), [](const CellElement& a, const CellElement& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  const auto expected = static_cast<std::size_t>((n - 1) * (n - 1));
  if (found.size() != expected) throw std::logic_error("penultimate cell has unexpected size");
  for (std::size_t k = 0; k < found.size(); ++k) {
    const int i = static_cast<int>(k) / (n - 1) + 1;
    const int j = static_cast<int>(k) % (n - 1) + 1;
    if (found[k].i != i || found[k].j != j) throw std::logic_error("ascent pairs not distinct");
  }
  return found;
}

}  // namespace

int cell_base_degree(int n) { return (n - 1) * (n - 2) / 2; }

const std::vector<CellElement>& penultimate_cell(int n) {
  if (n < kMinCellRank || n > kMaxCellRank) {
    throw std::invalid_argument("penultimate cell requires 3 <= n <= 9, got " + std::to_string(n));
  }
  static std::array<std::once_flag, kMaxCellRank + 1> once;
  static std::array<std::vector<CellElement>, kMaxCellRank + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [&] { cache[slot] = enumerate_cell(n); });
  return cache[slot];
}

const CellElement& cell_element(int n, int i, int j) {
  const auto& cell = penultimate_cell(n);
  check_indices(n, i, j);
  return cell[static_cast<std::size_t>((i - 1) * (n - 1) + (j - 1))];
}

int d_value(int n, int i, int j) {
  check_indices(n, i, j);
  return std::min({i - 1, j - 1, n - 1 - i, n - 1 - j});
}

LaurentPolynomial closed_form_p(int n, int i, int j) {
  const int top = length(cell_element(n, i, j).perm);
  LaurentPolynomial p;
  for (int k = 0; k <= d_value(n, i, j); ++k) p += LaurentPolynomial::monomial(top - 2 * k);
  return p;
}

bool cell_bruhat_adjacent(const CellElement& a, const CellElement& b) {
  require_same_rank(a.perm, b.perm);
  const int la = length(a.perm);
  const int lb = length(b.perm);
  if (la + 1 == lb) return bruhat_leq(a.perm, b.perm);
  if (lb + 1 == la) return bruhat_leq(b.perm, a.perm);
  return false;
}

}  // namespace bigrass
