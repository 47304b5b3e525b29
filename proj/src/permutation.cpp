#include "bigrass/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bigrass/fulton.hpp"

namespace bigrass {

namespace {

void check_rank(int n) {
  if (n < 1 || n > Permutation::kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(n) + " outside 1.." +
                                std::to_string(Permutation::kMaxRank));
  }
}

void check_generator(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator s" + std::to_string(i) + " out of range for S_" +
                                std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> word) : n_(static_cast<int>(word.size())) {
  check_rank(n_);
  std::array<bool, kMaxRank + 1> seen{};
  for (int i = 0; i < n_; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n_));
    }
    seen[static_cast<std::size_t>(v)] = true;
    word_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
}

Permutation Permutation::identity(int n) {
  check_rank(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::longest(int n) {
  check_rank(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(w);
}

Permutation Permutation::simple(int n, int i) {
  return identity(n).times_simple(i, Side::right);
}

Permutation Permutation::from_word(int n, std::span<const int> generators) {
  Permutation w = identity(n);
  for (int g : generators) w = w.times_simple(g, Side::right);
  return w;
}

std::vector<int> Permutation::one_line() const {
  return {word_.begin(), word_.begin() + n_};
}

Permutation Permutation::inverse() const {
  Permutation inv = *this;
  for (int i = 0; i < n_; ++i) {
    inv.word_[static_cast<std::size_t>(word_[static_cast<std::size_t>(i)] - 1)] =
        static_cast<std::uint8_t>(i + 1);
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::times_simple(int i, Side side) const {
  check_generator(n_, i);
  Permutation out = *this;
  if (side == Side::right) {
    std::swap(out.word_[static_cast<std::size_t>(i - 1)], out.word_[static_cast<std::size_t>(i)]);
  } else {
    for (int k = 0; k < n_; ++k) {
      auto& v = out.word_[static_cast<std::size_t>(k)];
      if (v == i) {
        v = static_cast<std::uint8_t>(i + 1);
      } else if (v == i + 1) {
        v = static_cast<std::uint8_t>(i);
      }
    }
  }
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) h = h * 31 + word_[static_cast<std::size_t>(i)];
  return h;
}

void require_same_rank(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch: S_" + std::to_string(a.rank()) + " vs S_" +
                                std::to_string(b.rank()));
  }
}

Permutation compose(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  std::vector<int> out(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation(out);
}

int length(const Permutation& w) {
  int inv = 0;
  for (int a = 1; a <= w.rank(); ++a) {
    for (int b = a + 1; b <= w.rank(); ++b) inv += w(a) > w(b) ? 1 : 0;
  }
  return inv;
}

bool is_descent(const Permutation& w, int i, Side side) {
  check_generator(w.rank(), i);
  if (side == Side::right) return w(i) > w(i + 1);
  // i is a left descent iff i+1 stands to the left of i in the word.
  for (int k = 1; k <= w.rank(); ++k) {
    if (w(k) == i) return false;
    if (w(k) == i + 1) return true;
  }
  return false;
}

std::vector<int> descents(const Permutation& w, Side side) {
  const Permutation v = side == Side::right ? w : w.inverse();
  std::vector<int> out;
  for (int i = 1; i < v.rank(); ++i) {
    if (v(i) > v(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const Permutation& w, Side side) {
  const Permutation v = side == Side::right ? w : w.inverse();
  std::vector<int> out;
  for (int i = 1; i < v.rank(); ++i) {
    if (v(i) < v(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> support(const Permutation& w) {
  std::vector<int> out;
  int running_max = 0;
  for (int i = 1; i < w.rank(); ++i) {
    running_max = std::max(running_max, w(i));
    if (running_max > i) out.push_back(i);
  }
  return out;
}

int content(const Permutation& w) { return static_cast<int>(support(w).size()); }

std::vector<int> reduced_word(const Permutation& w) {
  // Bubble sort w to the identity by right multiplications; the recorded
  // swaps read backwards spell w.
  std::vector<int> swaps;
  Permutation cur = w;
  for (;;) {
    int i = 1;
    while (i < cur.rank() && cur(i) < cur(i + 1)) ++i;
    if (i == cur.rank()) break;
    cur = cur.times_simple(i, Side::right);
    swaps.push_back(i);
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) { return corank_dominates(u, w); }

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  // Peel the reduced word of w from the left. With s the current first
  // letter (a left descent of the remainder), u <= w iff su <= sw when su < u
  // and u <= sw otherwise; u survives iff it matches a subword.
  Permutation rest = u;
  for (int s : reduced_word(w)) {
    if (is_descent(rest, s, Side::left)) rest = rest.times_simple(s, Side::left);
  }
  return rest.is_identity();
}

std::vector<Permutation> covers(const Permutation& w) {
  const int target = length(w) + 1;
  std::vector<Permutation> out;
  std::vector<int> word = w.one_line();
  for (int a = 0; a < w.rank(); ++a) {
    for (int b = a + 1; b < w.rank(); ++b) {
      if (word[static_cast<std::size_t>(a)] > word[static_cast<std::size_t>(b)]) continue;
      std::swap(word[static_cast<std::size_t>(a)], word[static_cast<std::size_t>(b)]);
      Permutation y(word);
      if (length(y) == target) out.push_back(y);
      std::swap(word[static_cast<std::size_t>(a)], word[static_cast<std::size_t>(b)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

YoungShape rs_shape(const Permutation& w) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= w.rank(); ++i) {
    int x = w(i);
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        x = 0;
        break;
      }
      std::swap(*it, x);
    }
    if (x != 0) rows.push_back({x});
  }
  YoungShape shape;
  for (const auto& row : rows) shape.parts.push_back(static_cast<int>(row.size()));
  return shape;
}

std::vector<Permutation> all_permutations(int n) {
  check_rank(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_index(const Permutation& w) {
  // Lehmer code in the factorial number system.
  std::size_t index = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    int smaller_after = 0;
    for (int k = i + 1; k <= w.rank(); ++k) smaller_after += w(k) < w(i) ? 1 : 0;
    index = index * static_cast<std::size_t>(w.rank() - i + 1) +
            static_cast<std::size_t>(smaller_after);
  }
  return index;
}

}  // namespace bigrass
