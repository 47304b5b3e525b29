#include "bigrass/bigrassmannian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bigrass/fulton.hpp"

namespace bigrass {

void BigrassTriple::validate() const {
  if (n < 2 || n > Permutation::kMaxRank) {
    throw std::invalid_argument("bigrassmannian rank out of range: " + std::to_string(n));
  }
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1) {
    throw std::invalid_argument("descent indices out of range in triple");
  }
  const int bound = std::min({i - 1, j - 1, n - 1 - i, n - 1 - j});
  if (k < 0 || k > bound) {
    throw std::invalid_argument("depth k=" + std::to_string(k) + " outside 0.." + std::to_string(bound));
  }
}

bool is_bigrassmannian(const Permutation& w) {
  return descents(w, Side::left).size() == 1 && descents(w, Side::right).size() == 1;
}

std::vector<Permutation> enumerate_bigrassmannian(int n) {
  if (n < 2 || n > 9) throw std::invalid_argument("enumeration supports 2 <= n <= 9");
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    if (is_bigrassmannian(w)) out.push_back(w);
  }
  return out;
}

std::vector<BigrassTriple> bigrassmannian_triples(int n) {
  if (n < 2 || n > Permutation::kMaxRank) {
    throw std::invalid_argument("bigrassmannian rank out of range: " + std::to_string(n));
  }
  std::vector<BigrassTriple> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const int bound = std::min({i - 1, j - 1, n - 1 - i, n - 1 - j});
      for (int k = 0; k <= bound; ++k) out.push_back({n, i, j, k});
    }
  }
  return out;
}

Permutation b_element(const BigrassTriple& t) {
  t.validate();
  if (t.j < t.i) return b_element({t.n, t.j, t.i, t.k}).inverse();
  std::vector<int> word;
  for (int m = 0; m <= t.k; ++m) {
    for (int g = t.i - m; g <= t.j + t.k - m; ++g) word.push_back(g);
  }
  return Permutation::from_word(t.n, word);
}

BigrassTriple triple_of(const Permutation& w) {
  const auto left = descents(w, Side::left);
  const auto right = descents(w, Side::right);
  if (left.size() != 1 || right.size() != 1) {
    throw std::invalid_argument("permutation is not bigrassmannian");
  }
  // The only essential cell of b(i,j,k) is (j,i), with co-rank k+1.
  const int i = left.front();
  const int j = right.front();
  const BigrassTriple t{w.rank(), i, j, rank_table(w).t(j, i) - 1};
  t.validate();
  return t;
}

const CellElement& phi(const Permutation& w) {
  if (!is_bigrassmannian(w)) throw std::invalid_argument("phi: permutation is not bigrassmannian");
  return cell_element(w.rank(), descents(w, Side::left).front(), descents(w, Side::right).front());
}

std::vector<Permutation> fiber(int n, int i, int j) {
  const int d = d_value(n, i, j);
  std::vector<Permutation> out;
  for (int k = 0; k <= d; ++k) out.push_back(b_element({n, i, j, k}));
  return out;
}

std::vector<Permutation> below(const Permutation& x) {
  std::vector<Permutation> out;
  if (x.rank() < 2) return out;
  for (const auto& t : bigrassmannian_triples(x.rank())) {
    Permutation b = b_element(t);
    if (bruhat_leq(b, x)) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Permutation> bruhat_maximal_below(const Permutation& x) {
  const auto candidates = below(x);
  std::vector<Permutation> out;
  for (const auto& y : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Permutation& z) {
      return z != y && bruhat_leq(y, z);
    });
    if (!dominated) out.push_back(y);
  }
  return out;
}

}  // namespace bigrass
