#pragma once

// Symmetric group S_n in one-line notation.
//
// Conventions used throughout the library:
//   * positions and values are 1-based, word[i] = w(i);
//   * compose(u, w)(i) = u(w(i)), so a written product s_a s_b ... s_c
//     applies its rightmost letter first;
//   * left multiplication by s_i swaps the values i and i+1, right
//     multiplication by s_i swaps the positions i and i+1.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bigrass {

enum class Side { left, right };

class Permutation {
 public:
  static constexpr int kMaxRank = 16;

  /// Identity of S_1.
  Permutation() : n_(1) { word_[0] = 1; }

  /// From one-line notation; throws std::invalid_argument unless `word`
  /// is a permutation of {1, ..., word.size()}.
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::span<const int>(word.begin(), word.size())) {}

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int n, int i);
  /// The product s_{g_1} s_{g_2} ... s_{g_k} (rightmost factor acts first).
  static Permutation from_word(int n, std::span<const int> generators);
  static Permutation from_word(int n, std::initializer_list<int> generators) {
    return from_word(n, std::span<const int>(generators.begin(), generators.size()));
  }

  int rank() const { return n_; }
  /// w(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  bool is_identity() const;

  /// s_i * this (side == left) or this * s_i (side == right).
  Permutation times_simple(int i, Side side) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on (rank, one-line word).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.word_ <=> b.word_;
  }

  std::size_t hash() const;

 private:
  int n_;
  std::array<std::uint8_t, kMaxRank> word_{};
};

struct YoungShape {
  std::vector<int> parts;
  friend bool operator==(const YoungShape&, const YoungShape&) = default;
};

/// u∘w as functions: result(i) = u(w(i)).
Permutation compose(const Permutation& u, const Permutation& w);

/// Number of inversions.
int length(const Permutation& w);

/// Sorted descent indices in 1..n-1.
std::vector<int> descents(const Permutation& w, Side side);
std::vector<int> ascents(const Permutation& w, Side side);
bool is_descent(const Permutation& w, int i, Side side);

/// Generators occurring in a (every) reduced word.
std::vector<int> support(const Permutation& w);
int content(const Permutation& w);

/// Canonical reduced word obtained by bubble sort; evaluating it with
/// Permutation::from_word gives back w.
std::vector<int> reduced_word(const Permutation& w);

/// Bruhat order through co-rank dominance.
bool bruhat_leq(const Permutation& u, const Permutation& w);
/// Bruhat order by greedy subword matching against reduced_word(w).
/// Independent of the co-rank route; used to cross-check it.
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

/// Elements covering w in Bruhat order.
std::vector<Permutation> covers(const Permutation& w);

/// Shape of the Robinson-Schensted insertion tableau.
YoungShape rs_shape(const Permutation& w);

/// All of S_n in lexicographic order of the one-line word.
std::vector<Permutation> all_permutations(int n);

/// Lexicographic index of w within all_permutations(w.rank()).
std::size_t lex_index(const Permutation& w);

void require_same_rank(const Permutation& a, const Permutation& b);

}  // namespace bigrass

template <>
struct std::hash<bigrass::Permutation> {
  std::size_t operator()(const bigrass::Permutation& w) const noexcept { return w.hash(); }
};
