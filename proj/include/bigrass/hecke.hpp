#pragma once

// The Hecke algebra of S_n over Z[v, v^{-1}] in the standard basis {H_w},
// normalised by the quadratic relation (H_i + v)(H_i - v^{-1}) = 0, and the
// Kazhdan-Lusztig basis
//
//   KL(w) = H_w + sum_{x < w} p_{x,w} H_x,    p_{x,w} in vZ[v],
//
// computed from scratch by the usual induction on length. Nothing in this
// file relies on closed formulas for particular cells; it is the reference
// against which those formulas are checked.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "bigrass/laurent.hpp"
#include "bigrass/permutation.hpp"

namespace bigrass {

class HeckeElement {
 public:
  using Terms = std::map<Permutation, LaurentPolynomial>;

  explicit HeckeElement(int n) : n_(n) {}
  /// The standard basis element H_w.
  static HeckeElement standard(const Permutation& w);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coordinate of H_w; zero when absent.
  LaurentPolynomial coefficient(const Permutation& w) const;
  /// Adds c * H_w, dropping the entry if it cancels.
  void add_term(const Permutation& w, const LaurentPolynomial& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  /// Scalar multiplication.
  HeckeElement& operator*=(const LaurentPolynomial& c);

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPolynomial& c, HeckeElement h) { return h *= c; }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// H_i * h (left) or h * H_i (right).
HeckeElement mul_gen(const HeckeElement& h, int i, Side side);

/// The ring involution v -> v^{-1}, H_i -> H_i^{-1} = H_i + (v - v^{-1}).
HeckeElement bar_involution(const HeckeElement& h);

enum class DescentChoice { smallest, largest };

/// Memoised KL polynomials p_{x,w} for one rank.
///
/// Columns (all p_{x,w} for fixed w) are filled on demand, or all at once by
/// build_all(). Lazily filling a table mutates it, so a table shared between
/// threads must be fully built first; after build_all() every query is const
/// in effect and safe to run concurrently.
class KLTable {
 public:
  explicit KLTable(int n, DescentChoice choice = DescentChoice::smallest);
  ~KLTable();
  KLTable(KLTable&&) noexcept;
  KLTable& operator=(KLTable&&) noexcept;

  int rank() const;
  std::size_t size() const;

  /// p_{x,w}: 1 if x = w, 0 unless x <= w.
  LaurentPolynomial p(const Permutation& x, const Permutation& w);
  /// Coefficient of v in p_{x,y} + p_{y,x}.
  std::int64_t mu(const Permutation& x, const Permutation& y);
  /// KL(w) in the standard basis.
  HeckeElement basis_element(const Permutation& w);

  /// Fills every column, shortest elements first.
  void build_all();
  /// Number of columns computed so far.
  std::size_t columns_built() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrappers over a fresh table; prefer holding a KLTable when
/// issuing many queries.
HeckeElement kl_basis_element(const Permutation& w);
LaurentPolynomial kl_polynomial(const Permutation& x, const Permutation& w);
std::int64_t mu(const Permutation& x, const Permutation& y);

}  // namespace bigrass
