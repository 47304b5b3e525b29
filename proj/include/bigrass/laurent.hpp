#pragma once

// Exact Laurent polynomials in one variable v with int64 coefficients.
// Every arithmetic step is overflow-checked and throws std::overflow_error
// instead of wrapping.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bigrass {

class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;
  /// The constant polynomial c.
  LaurentPolynomial(Coeff c);  // NOLINT(google-explicit-constructor)

  /// c * v^exponent
  static LaurentPolynomial monomial(int exponent, Coeff c = 1);
  static LaurentPolynomial v() { return monomial(1); }
  static LaurentPolynomial v_inverse() { return monomial(-1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponents with a nonzero coefficient; undefined on zero.
  int min_degree() const { return low_; }
  int max_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Coeff coefficient(int exponent) const;
  /// Sum of all coefficients.
  Coeff eval_at_one() const;
  /// v -> v^{-1}.
  LaurentPolynomial bar() const;
  /// Exponents with nonzero coefficient, ascending.
  std::vector<int> support() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  /// Multiply by v^k.
  LaurentPolynomial shifted(int k) const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Descending exponents, e.g. "v^5 + v^3", "2v^2 - 1 + v^-2", "0".
  std::string to_string() const;
  /// Accepts what to_string produces, in any term order, plus "*" between
  /// coefficient and v. Throws std::invalid_argument on malformed input.
  static LaurentPolynomial parse(std::string_view text);

 private:
  void normalize();

  int low_ = 0;
  std::vector<Coeff> coeffs_;  // coeffs_[k] multiplies v^(low_ + k)
};

}  // namespace bigrass
