#include "bigrass/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bigrass {

HeckeElement HeckeElement::standard(const Permutation& w) {
  HeckeElement h(w.rank());
  h.add_term(w, LaurentPolynomial(1));
  return h;
}

LaurentPolynomial HeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentPolynomial& c) {
  if (w.rank() != n_) throw std::invalid_argument("Hecke element rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("Hecke element rank mismatch");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("Hecke element rank mismatch");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

HeckeElement mul_gen(const HeckeElement& h, int i, Side side) {
  if (i < 1 || i > h.rank() - 1) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  }
  // H_i H_w = H_{s_i w}                          if s_i w > w
  //         = H_{s_i w} + (v^{-1} - v) H_w        if s_i w < w
  const LaurentPolynomial correction = LaurentPolynomial::v_inverse() - LaurentPolynomial::v();
  HeckeElement out(h.rank());
  for (const auto& [w, c] : h.terms()) {
    out.add_term(w.times_simple(i, side), c);
    if (is_descent(w, i, side)) out.add_term(w, c * correction);
  }
  return out;
}

HeckeElement bar_involution(const HeckeElement& h) {
  // bar(H_w) = H_{i_1}^{-1} ... H_{i_l}^{-1} for w = s_{i_1} ... s_{i_l}.
  const LaurentPolynomial shift = LaurentPolynomial::v() - LaurentPolynomial::v_inverse();
  HeckeElement out(h.rank());
  for (const auto& [w, c] : h.terms()) {
    HeckeElement img = HeckeElement::standard(Permutation::identity(h.rank()));
    for (int i : reduced_word(w)) {
      HeckeElement next = mul_gen(img, i, Side::right);
      next += shift * img;
      img = std::move(next);
    }
    out += c.bar() * img;
  }
  return out;
}

struct KLTable::Impl {
  int n;
  DescentChoice choice;
  std::vector<Permutation> elements;              // lexicographic
  std::vector<int> lengths;
  std::vector<std::vector<std::size_t>> left_mul;  // left_mul[i-1][x] = index of s_i x
  std::vector<std::vector<LaurentPolynomial>> columns;
  std::size_t built = 0;

  std::size_t index(const Permutation& w) const {
    if (w.rank() != n) throw std::invalid_argument("permutation rank does not match KL table");
    return lex_index(w);
  }

  int descent_of(std::size_t w) const {
    auto is_left_descent = [&](int i) {
      return lengths[left_mul[static_cast<std::size_t>(i - 1)][w]] < lengths[w];
    };
    if (choice == DescentChoice::smallest) {
      for (int i = 1; i < n; ++i) {
        if (is_left_descent(i)) return i;
      }
    } else {
      for (int i = n - 1; i >= 1; --i) {
        if (is_left_descent(i)) return i;
      }
    }
    return 0;
  }

  const std::vector<LaurentPolynomial>& column(std::size_t w) {
    if (!columns[w].empty()) return columns[w];
    std::vector<LaurentPolynomial> result(elements.size());
    const int s = descent_of(w);
    if (s == 0) {
      result[w] = LaurentPolynomial(1);
    } else {
      const auto& s_row = left_mul[static_cast<std::size_t>(s - 1)];
      const std::size_t y = s_row[w];
      // `columns` never resizes and a filled column is never rewritten, so
      // references stay valid across the recursive calls.
      const auto& col_y = column(y);

      // (H_s + v) * KL(y): H_s H_z + v H_z = H_{sz} + v H_z        if sz > z
      //                                    = H_{sz} + v^{-1} H_z   if sz < z
      for (std::size_t z = 0; z < col_y.size(); ++z) {
        const auto& c = col_y[z];
        if (c.is_zero()) continue;
        const std::size_t sz = s_row[z];
        result[sz] += c;
        result[z] += c.shifted(lengths[sz] > lengths[z] ? 1 : -1);
      }
      // Subtract mu(x, y) KL(x) over x < y with sx < x.
      for (std::size_t x = 0; x < col_y.size(); ++x) {
        if (x == y || col_y[x].is_zero()) continue;
        const auto m = col_y[x].coefficient(1);
        if (m == 0 || lengths[s_row[x]] > lengths[x]) continue;
        const auto& col_x = column(x);
        const LaurentPolynomial factor(m);
        for (std::size_t z = 0; z < col_x.size(); ++z) {
          if (!col_x[z].is_zero()) result[z] -= factor * col_x[z];
        }
      }
    }
    columns[w] = std::move(result);
    ++built;
    return columns[w];
  }
};

KLTable::KLTable(int n, DescentChoice choice) : impl_(std::make_unique<Impl>()) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("KL table supports ranks 1..7, got " + std::to_string(n));
  }
  impl_->n = n;
  impl_->choice = choice;
  impl_->elements = all_permutations(n);
  const std::size_t count = impl_->elements.size();
  impl_->lengths.resize(count);
  impl_->left_mul.assign(static_cast<std::size_t>(n - 1), std::vector<std::size_t>(count));
  for (std::size_t k = 0; k < count; ++k) {
    const auto& w = impl_->elements[k];
    impl_->lengths[k] = length(w);
    for (int i = 1; i < n; ++i) {
      impl_->left_mul[static_cast<std::size_t>(i - 1)][k] = lex_index(w.times_simple(i, Side::left));
    }
  }
  impl_->columns.resize(count);
}

KLTable::~KLTable() = default;
KLTable::KLTable(KLTable&&) noexcept = default;
KLTable& KLTable::operator=(KLTable&&) noexcept = default;

int KLTable::rank() const { return impl_->n; }
std::size_t KLTable::size() const { return impl_->elements.size(); }
std::size_t KLTable::columns_built() const { return impl_->built; }

LaurentPolynomial KLTable::p(const Permutation& x, const Permutation& w) {
  require_same_rank(x, w);
  const std::size_t xi = impl_->index(x);
  const std::size_t wi = impl_->index(w);
  return impl_->column(wi)[xi];
}

std::int64_t KLTable::mu(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  if (x == y) return 0;
  return (p(x, y) + p(y, x)).coefficient(1);
}

HeckeElement KLTable::basis_element(const Permutation& w) {
  const auto& col = impl_->column(impl_->index(w));
  HeckeElement h(impl_->n);
  for (std::size_t x = 0; x < col.size(); ++x) h.add_term(impl_->elements[x], col[x]);
  return h;
}

void KLTable::build_all() {
  std::vector<std::size_t> order(impl_->elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return impl_->lengths[a] < impl_->lengths[b];
  });
  for (std::size_t w : order) impl_->column(w);
}

HeckeElement kl_basis_element(const Permutation& w) { return KLTable(w.rank()).basis_element(w); }

LaurentPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
  require_same_rank(x, w);
  return KLTable(w.rank()).p(x, w);
}

std::int64_t mu(const Permutation& x, const Permutation& y) {
  require_same_rank(x, y);
  return KLTable(x.rank()).mu(x, y);
}

}  // namespace bigrass
