#include "bigrass/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "bigrass/bigrassmannian.hpp"
#include "bigrass/cells.hpp"
#include "bigrass/fulton.hpp"
#include "bigrass/hecke.hpp"
#include "bigrass/homology.hpp"
#include "bigrass/io.hpp"

namespace bigrass {

namespace {

// Collects results; a check body returns an empty string on success or a
// counterexample description.
class Report {
 public:
  explicit Report(std::vector<CheckResult>& out) : out_(out) {}

  void check(std::string_view suite, std::string name, std::string identity,
             const std::function<std::string()>& body) {
    CheckResult r{std::string(suite), std::move(name), std::move(identity), true, "ok"};
    try {
      std::string failure = body();
      if (!failure.empty()) {
        r.passed = false;
        r.detail = std::move(failure);
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

std::string show(const Permutation& w) { return "[" + format_one_line(w) + "]"; }

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

std::set<std::tuple<int, int, int>> as_points(const std::vector<GradedSimple>& v) {
  std::set<std::tuple<int, int, int>> out;
  for (const auto& g : v) out.emplace(g.i(), g.j(), g.shift);
  return out;
}

void counting_suite(int n, Report& report) {
  constexpr std::string_view suite = "counting";
  const auto filtered = enumerate_bigrassmannian(n);

  report.check(suite, "tetrahedral count", "|B_n| = (n-1)n(n+1)/6 = sum of p_{e,w}(1) over the cell", [&] {
    const long expected = static_cast<long>(n - 1) * n * (n + 1) / 6;
    long from_cell = 0;
    for (const auto& c : penultimate_cell(n)) from_cell += closed_form_p(n, c.i, c.j).eval_at_one();
    if (static_cast<long>(filtered.size()) != expected || from_cell != expected) {
      return "filter " + std::to_string(filtered.size()) + ", cell sum " + std::to_string(from_cell) +
             ", expected " + std::to_string(expected);
    }
    return std::string();
  });

  report.check(suite, "triple bijection", "b(i,j,k) enumerates the descent-filtered set bijectively", [&] {
    std::set<Permutation> built;
    for (const auto& t : bigrassmannian_triples(n)) {
      const auto b = b_element(t);
      if (!built.insert(b).second) return "duplicate " + show(b);
      if (triple_of(b) != t) return "triple_of does not invert b_element at " + show(b);
    }
    if (built != as_set(filtered)) return std::string("image differs from filter");
    return std::string();
  });

  report.check(suite, "fiber sizes", "|B_n^(i,j)| = p_{e,w_ij}(1)", [&] {
    for (const auto& c : penultimate_cell(n)) {
      const auto f = fiber(n, c.i, c.j);
      const auto count = std::count_if(filtered.begin(), filtered.end(), [&](const Permutation& w) {
        return descents(w, Side::left) == std::vector<int>{c.i} && descents(w, Side::right) == std::vector<int>{c.j};
      });
      const auto expected = closed_form_p(n, c.i, c.j).eval_at_one();
      if (static_cast<long>(f.size()) != expected || count != expected) {
        return "fiber (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
      }
    }
    return std::string();
  });

  report.check(suite, "fiber chains", "fibers are Bruhat chains separated by outside bigrassmannians", [&] {
    for (const auto& c : penultimate_cell(n)) {
      const auto f = fiber(n, c.i, c.j);
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        if (!bruhat_leq(f[k], f[k + 1]) || f[k] == f[k + 1]) return "not a chain at " + show(f[k]);
        const bool separated = std::any_of(filtered.begin(), filtered.end(), [&](const Permutation& w) {
          const auto& target = phi(w);
          const bool outside = target.i != c.i || target.j != c.j;
          return outside && bruhat_leq(f[k], w) && bruhat_leq(w, f[k + 1]);
        });
        if (!separated) return "no separating element between " + show(f[k]) + " and " + show(f[k + 1]);
      }
    }
    return std::string();
  });

  report.check(suite, "essential set of b(i,j,k)", "Ess(b(i,j,k)) = {(j,i)} with co-rank k+1", [&] {
    for (const auto& t : bigrassmannian_triples(n)) {
      const auto ess = essential_set(b_element(t));
      if (ess.size() != 1 || ess[0].row != t.j || ess[0].col != t.i || ess[0].corank != t.k + 1) {
        return "triple (" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
      }
    }
    return std::string();
  });
}

void oracle_suite(int n, Report& report) {
  constexpr std::string_view suite = "oracle";
  KLTable table(n);
  const auto e = Permutation::identity(n);
  const auto& cell = penultimate_cell(n);

  report.check(suite, "closed form", "v^l + v^(l-2) + ... + v^(l-2d) equals the KL oracle p_{e,w_ij}", [&] {
    for (const auto& c : cell) {
      const auto oracle = table.p(e, c.perm);
      if (oracle != closed_form_p(n, c.i, c.j)) {
        return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "): oracle " + oracle.to_string();
      }
    }
    return std::string();
  });

  report.check(suite, "degree window", "exponents of p_{e,w} lie in [(n-1)(n-2)/2, l(w)] on the cell", [&] {
    for (const auto& c : cell) {
      const auto p = table.p(e, c.perm);
      if (p.min_degree() < cell_base_degree(n) || p.max_degree() > length(c.perm)) {
        return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
      }
    }
    return std::string();
  });

  report.check(suite, "simple reflections", "p_{s,w} = v^-1 p_{e,w} for w_ij with i != j", [&] {
    for (const auto& c : cell) {
      if (c.i == c.j) continue;
      const auto pe = table.p(e, c.perm);
      for (int s = 1; s < n; ++s) {
        if (table.p(Permutation::simple(n, s), c.perm) != pe.shifted(-1)) {
          return "w_" + std::to_string(c.i) + std::to_string(c.j) + ", s" + std::to_string(s);
        }
      }
    }
    return std::string();
  });

  report.check(suite, "row recurrence",
               "(v+v^-1) p_ij = p_(i-1)j + p_(i+1)j + [i = n-j] v^l(w_0) for i != j", [&] {
    const auto v_sum = LaurentPolynomial::v() + LaurentPolynomial::v_inverse();
    auto p_at = [&](int i, int j) {
      if (i < 1 || i > n - 1) return LaurentPolynomial();
      return table.p(e, cell_element(n, i, j).perm);
    };
    const int top = n * (n - 1) / 2;
    for (const auto& c : cell) {
      if (c.i == c.j) continue;
      auto rhs = p_at(c.i - 1, c.j) + p_at(c.i + 1, c.j);
      if (c.i == n - c.j) rhs += LaurentPolynomial::monomial(top);
      if (v_sum * p_at(c.i, c.j) != rhs) return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
    }
    return std::string();
  });

  report.check(suite, "mu on the cell", "mu(x,y) = 1 iff x,y are Bruhat-adjacent in the cell, else 0", [&] {
    for (const auto& a : cell) {
      for (const auto& b : cell) {
        const auto m = table.mu(a.perm, b.perm);
        const bool adjacent = cell_bruhat_adjacent(a, b);
        if (m != (adjacent ? 1 : 0)) return show(a.perm) + " " + show(b.perm);
        const bool grid = std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1;
        if (adjacent != grid) return "adjacency is not the grid at " + show(a.perm) + " " + show(b.perm);
      }
    }
    return std::string();
  });

  if (n <= 4) {
    report.check(suite, "KL basis", "KL(w) is bar-invariant and unitriangular with p in vZ[v]", [&] {
      for (const auto& w : all_permutations(n)) {
        const auto h = table.basis_element(w);
        if (bar_involution(h) != h) return "not bar-invariant: " + show(w);
        for (const auto& [x, p] : h.terms()) {
          if (x == w ? p != LaurentPolynomial(1) : (p.min_degree() < 1 || !bruhat_leq(x, w))) {
            return "bad coefficient at " + show(x) + " in KL" + show(w);
          }
        }
      }
      return std::string();
    });
  }
}

void socle_suite(int n, Report& report) {
  constexpr std::string_view suite = "socle";
  const auto group = all_permutations(n);

  report.check(suite, "simple socle", "|soc(D_e/D_w)| = 1 exactly for bigrassmannian w", [&] {
    for (const auto& w : group) {
      if ((socle_graded(w).size() == 1) != is_bigrassmannian(w)) return show(w);
    }
    return std::string();
  });

  report.check(suite, "two socle formulas", "essential-set/co-rank socle = images of Bruhat-maximal bigrassmannians",
               [&] {
                 for (const auto& w : group) {
                   if (as_points(socle_graded(w)) != as_points(socle_graded_via_maximal(w))) return show(w);
                 }
                 return std::string();
               });

  report.check(suite, "maximal vs essential", "BM(w) -> Ess(w), x -> (right descent, left descent) is a bijection",
               [&] {
                 for (const auto& w : group) {
                   std::set<std::pair<int, int>> image;
                   for (const auto& b : bruhat_maximal_below(w)) {
                     image.emplace(descents(b, Side::right).front(), descents(b, Side::left).front());
                   }
                   std::set<std::pair<int, int>> ess;
                   for (const auto& c : essential_set(w)) ess.emplace(c.row, c.col);
                   if (image != ess || image.size() != bruhat_maximal_below(w).size()) return show(w);
                 }
                 return std::string();
               });

  report.check(suite, "degree parity", "socle shifts lie in the tetrahedron column of their label", [&] {
    for (const auto& w : group) {
      for (const auto& g : socle_graded(w)) {
        if (closed_form_p(n, g.i(), g.j()).coefficient(g.shift) != 1) return show(w);
      }
    }
    return std::string();
  });

  report.check(suite, "monotonicity", "v <= w implies J-factors of D_e/D_v are among those of D_e/D_w", [&] {
    for (const auto& v : group) {
      const auto fv = as_points(j_subquotients(v));
      for (const auto& w : covers(v)) {
        const auto fw = as_points(j_subquotients(w));
        if (!std::includes(fw.begin(), fw.end(), fv.begin(), fv.end())) return show(v) + " < " + show(w);
      }
    }
    return std::string();
  });

  report.check(suite, "Bruhat order", "co-rank dominance agrees with subword matching", [&] {
    if (n <= 5) {
      for (const auto& u : group) {
        for (const auto& w : group) {
          if (bruhat_leq(u, w) != bruhat_leq_subword(u, w)) return show(u) + " " + show(w);
        }
      }
      return std::string();
    }
    std::mt19937_64 rng(20240611u + static_cast<unsigned>(n));
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      const auto& u = group[pick(rng)];
      const auto& w = group[pick(rng)];
      if (bruhat_leq(u, w) != bruhat_leq_subword(u, w)) return show(u) + " " + show(w);
    }
    return std::string();
  });
}

void ext_suite(int n, Report& report) {
  constexpr std::string_view suite = "ext";
  const auto group = all_permutations(n);
  const auto w0 = Permutation::longest(n);
  // Exhaustive over pairs only while that stays cheap.
  const bool exhaustive = n <= 5;
  std::mt19937_64 rng(777u + static_cast<unsigned>(n));
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  auto for_pairs = [&](const std::function<std::string(const Permutation&, const Permutation&)>& f) {
    if (exhaustive) {
      for (const auto& x : group) {
        for (const auto& y : group) {
          if (auto r = f(x, y); !r.empty()) return r;
        }
      }
      return std::string();
    }
    for (int trial = 0; trial < 3000; ++trial) {
      if (auto r = f(group[pick(rng)], group[pick(rng)]); !r.empty()) return r;
    }
    return std::string();
  };

  report.check(suite, "Ext values", "dim Ext^1(L_x, D_y) in {0,1} for x != w_0 and = content(w_0 y) for x = w_0", [&] {
    for (const auto& y : group) {
      if (ext1_dimension(w0, y) != content(compose(w0, y))) return "x = w_0, y = " + show(y);
    }
    return for_pairs([&](const Permutation& x, const Permutation& y) {
      const int d = ext1_dimension(x, y);
      if (x != w0 && d != 0 && d != 1) return show(x) + " " + show(y);
      return std::string();
    });
  });

  report.check(suite, "regular walls", "singular formula with no walls equals the regular one", [&] {
    const auto none = WallSet::none(n);
    return for_pairs([&](const Permutation& x, const Permutation& y) {
      if (ext1_dimension_singular(x, y, none) != ext1_dimension(x, y)) return show(x) + " " + show(y);
      return std::string();
    });
  });

  report.check(suite, "fully singular", "all walls give the zero Ext table", [&] {
    const auto all = WallSet::all(n);
    return for_pairs([&](const Permutation& x, const Permutation& y) {
      if (ext1_dimension_singular(x, y, all) != 0) return show(x) + " " + show(y);
      return std::string();
    });
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "counting") return Suite::counting;
  if (name == "oracle") return Suite::oracle;
  if (name == "socle") return Suite::socle;
  if (name == "ext") return Suite::ext;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::counting: return "counting";
    case Suite::oracle: return "oracle";
    case Suite::socle: return "socle";
    case Suite::ext: return "ext";
  }
  return "all";
}

std::vector<CheckResult> run_verification(int n, Suite suite) {
  if (n < 3 || n > 9) throw std::invalid_argument("verification needs 3 <= n <= 9");
  std::vector<CheckResult> out;
  Report report(out);
  if (suite == Suite::all || suite == Suite::counting) counting_suite(n, report);
  if (suite == Suite::all || suite == Suite::oracle) oracle_suite(n, report);
  if (suite == Suite::all || suite == Suite::socle) socle_suite(n, report);
  if (suite == Suite::all || suite == Suite::ext) ext_suite(n, report);
  return out;
}

}  // namespace bigrass
