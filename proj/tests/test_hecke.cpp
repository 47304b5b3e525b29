#include <doctest.h>

#include <random>

#include "bigrass/hecke.hpp"
#include "oracles.hpp"

using namespace bigrass;
using L = LaurentPolynomial;

namespace {

HeckeElement kl(KLTable& table, const Permutation& w) { return table.basis_element(w); }

// Product of two elements, expanding the right factor along reduced words.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.rank());
  for (const auto& [w, c] : b.terms()) {
    HeckeElement piece = a;
    for (int g : reduced_word(w)) piece = mul_gen(piece, g, Side::right);
    out += c * piece;
  }
  return out;
}

}  // namespace

TEST_CASE("generator multiplication") {
  const auto e = HeckeElement::standard(Permutation::identity(3));
  const auto s1 = HeckeElement::standard(Permutation::simple(3, 1));
  CHECK(mul_gen(e, 1, Side::left) == s1);

  HeckeElement expected = e;
  expected.add_term(Permutation::simple(3, 1), L::v_inverse() - L::v());
  CHECK(mul_gen(s1, 1, Side::left) == expected);
  CHECK(mul_gen(s1, 2, Side::left) == HeckeElement::standard(Permutation::from_word(3, {2, 1})));
  CHECK(mul_gen(s1, 2, Side::right) == HeckeElement::standard(Permutation::from_word(3, {1, 2})));
  CHECK_THROWS_AS(mul_gen(e, 3, Side::left), std::invalid_argument);
}

TEST_CASE("quadratic relation (H_i + v)(H_i - v^-1) = 0") {
  for (const auto& w : oracle::everything(4)) {
    const auto h = HeckeElement::standard(w);
    for (int i = 1; i < 4; ++i) {
      const auto hi_h = mul_gen(h, i, Side::left);
      // H_i H_i h + (v - v^-1) H_i h - h
      const auto lhs = mul_gen(hi_h, i, Side::left) + (L::v() - L::v_inverse()) * hi_h - h;
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("left and right multiplication commute") {
  for (const auto& w : oracle::everything(4)) {
    const auto h = HeckeElement::standard(w);
    for (int i = 1; i < 4; ++i) {
      for (int j = 1; j < 4; ++j) {
        CHECK(mul_gen(mul_gen(h, i, Side::left), j, Side::right) ==
              mul_gen(mul_gen(h, j, Side::right), i, Side::left));
      }
    }
  }
}

TEST_CASE("bar involution") {
  const auto e = HeckeElement::standard(Permutation::identity(3));
  CHECK(bar_involution(e) == e);

  HeckeElement expected = HeckeElement::standard(Permutation::simple(3, 1));
  expected.add_term(Permutation::identity(3), L::v() - L::v_inverse());
  CHECK(bar_involution(HeckeElement::standard(Permutation::simple(3, 1))) == expected);

  std::mt19937 rng(5);
  const auto all = oracle::everything(3);
  for (int t = 0; t < 50; ++t) {
    HeckeElement h(3);
    for (int k = 0; k < 3; ++k) {
      h.add_term(all[rng() % all.size()], L::monomial(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 3)));
    }
    CHECK(bar_involution(bar_involution(h)) == h);
  }
}

TEST_CASE("bar involution is multiplicative on S_3") {
  const auto all = oracle::everything(3);
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto a = HeckeElement::standard(x);
      const auto b = HeckeElement::standard(y);
      CHECK(bar_involution(multiply(a, b)) == multiply(bar_involution(a), bar_involution(b)));
    }
  }
}

TEST_CASE("small KL basis elements") {
  KLTable table(3);
  HeckeElement expected = HeckeElement::standard(Permutation::simple(3, 1));
  expected.add_term(Permutation::identity(3), L::v());
  CHECK(kl(table, Permutation::simple(3, 1)) == expected);
  CHECK(table.p(Permutation::identity(3), Permutation::from_word(3, {1, 2})) == L::monomial(2));
  CHECK(table.p(Permutation::simple(3, 1), Permutation::simple(3, 2)).is_zero());
  CHECK(mu(Permutation::identity(3), Permutation::simple(3, 1)) == 1);
}

TEST_CASE("KL polynomials under the longest element are monomials") {
  for (int n = 2; n <= 4; ++n) {
    KLTable table(n);
    const auto w0 = Permutation::longest(n);
    for (const auto& x : oracle::everything(n)) {
      CHECK(table.p(x, w0) == L::monomial(oracle::inversions(w0) - oracle::inversions(x)));
    }
  }
}

TEST_CASE("a KL polynomial with two terms") {
  const Permutation w22{4, 2, 3, 1};
  CHECK(kl_polynomial(Permutation::identity(4), w22) == L::parse("v^5 + v^3"));
  CHECK(mu(Permutation::identity(4), w22) == 0);
}

TEST_CASE("KL basis is bar-invariant and unitriangular on S_4") {
  KLTable table(4);
  for (const auto& w : oracle::everything(4)) {
    const auto h = kl(table, w);
    CHECK(bar_involution(h) == h);
    CHECK(h.coefficient(w) == L(1));
    const auto interval = oracle::lower_interval(w);
    for (const auto& [x, c] : h.terms()) {
      CHECK(interval.count(x) == 1);
      if (x != w) CHECK(c.min_degree() >= 1);
    }
  }
}

TEST_CASE("KL basis is bar-invariant on a sample of S_5") {
  KLTable table(5);
  std::mt19937 rng(17);
  const auto all = oracle::everything(5);
  for (int t = 0; t < 25; ++t) {
    const auto& w = all[rng() % all.size()];
    const auto h = kl(table, w);
    CHECK(bar_involution(h) == h);
  }
}

TEST_CASE("descent choice does not change the answer") {
  for (int n = 3; n <= 5; ++n) {
    KLTable a(n, DescentChoice::smallest);
    KLTable b(n, DescentChoice::largest);
    a.build_all();
    b.build_all();
    for (const auto& w : oracle::everything(n)) CHECK(a.basis_element(w) == b.basis_element(w));
  }
}

TEST_CASE("multiplying a KL element by a generator") {
  for (int n = 3; n <= 4; ++n) {
    KLTable table(n);
    const auto all = oracle::everything(n);
    for (const auto& y : all) {
      const auto ky = kl(table, y);
      for (int i = 1; i < n; ++i) {
        // (H_i + v) KL(y)
        const auto product = mul_gen(ky, i, Side::left) + L::v() * ky;
        const auto sy = oracle::apply_left(y, i);
        if (oracle::inversions(sy) < oracle::inversions(y)) {
          CHECK(product == (L::v() + L::v_inverse()) * ky);
        } else {
          HeckeElement expected = kl(table, sy);
          for (const auto& x : all) {
            if (x == y || oracle::inversions(oracle::apply_left(x, i)) > oracle::inversions(x)) continue;
            const auto m = table.p(x, y).coefficient(1);
            if (m != 0) expected += L(m) * kl(table, x);
          }
          CHECK(product == expected);
        }
      }
    }
  }
}

TEST_CASE("mu is symmetric and table bookkeeping") {
  KLTable table(4);
  CHECK(table.size() == 24);
  CHECK(table.columns_built() == 0);
  const auto all = oracle::everything(4);
  for (const auto& x : all) {
    for (const auto& y : all) CHECK(table.mu(x, y) == table.mu(y, x));
  }
  table.build_all();
  CHECK(table.columns_built() == 24);
  CHECK_THROWS_AS(KLTable(8), std::invalid_argument);
  CHECK_THROWS_AS(table.p(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}
