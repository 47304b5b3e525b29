#include "bigrass/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace bigrass {

namespace {

using Coeff = LaurentPolynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

Coeff checked_neg(Coeff a) { return checked_mul(a, -1); }

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coeff c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coeff c) {
  LaurentPolynomial p(c);
  if (c != 0) p.low_ = exponent;
  return p;
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff LaurentPolynomial::coefficient(int exponent) const {
  if (is_zero() || exponent < min_degree() || exponent > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Coeff LaurentPolynomial::eval_at_one() const {
  Coeff sum = 0;
  for (Coeff c : coeffs_) sum = checked_add(sum, c);
  return sum;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out;
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.low_ = -max_degree();
  return out;
}

std::vector<int> LaurentPolynomial::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.push_back(low_ + static_cast<int>(k));
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(min_degree(), other.min_degree());
  const int hi = std::max(max_degree(), other.max_degree());
  std::vector<Coeff> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    sum[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    auto& slot = sum[static_cast<std::size_t>(other.low_ - lo) + k];
    slot = checked_add(slot, other.coeffs_[k]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPolynomial();
  std::vector<Coeff> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) {
      prod[a + b] = checked_add(prod[a + b], checked_mul(coeffs_[a], other.coeffs_[b]));
    }
  }
  low_ += other.low_;
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (Coeff& c : out.coeffs_) c = checked_neg(c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = max_degree(); e >= min_degree(); --e) {
    Coeff c = coefficient(e);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // Magnitude without negating INT64_MIN.
    const auto mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  auto fail = [&]() { throw std::invalid_argument("malformed polynomial: " + std::string(text)); };
  auto read_int = [&](std::size_t& pos, Coeff& value) {
    const char* begin = s.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range) throw std::overflow_error("coefficient out of range");
    if (ec != std::errc() || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
  };

  LaurentPolynomial result;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Coeff sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail();
    }
    first = false;

    Coeff coeff = 1;
    const bool has_coeff = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    if (has_coeff && !read_int(pos, coeff)) fail();
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'v') fail();
    }
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Coeff e = 0;
        if (!read_int(pos, e) || e < -1'000'000 || e > 1'000'000) fail();
        exponent = static_cast<int>(e);
      }
    } else if (!has_coeff) {
      fail();
    }
    result += monomial(exponent, checked_mul(sign, coeff));
  }
  return result;
}

}  // namespace bigrass
