#include <doctest.h>

#include "bigrass/fulton.hpp"
#include "oracles.hpp"

using namespace bigrass;

namespace {

std::vector<std::vector<int>> corank_rows(const Permutation& w) {
  const RankTable t(w);
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= w.rank(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= w.rank(); ++j) row.push_back(t.t(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("co-rank tables of the two worked examples") {
  const Permutation w = Permutation::from_word(5, {3, 4, 1, 2, 3, 2, 1});
  REQUIRE(w == Permutation({5, 2, 4, 1, 3}));
  CHECK(corank_rows(w) == std::vector<std::vector<int>>{
                              {1, 1, 1, 1, 0},
                              {1, 1, 1, 1, 0},
                              {1, 1, 2, 1, 0},
                              {0, 0, 1, 1, 0},
                              {0, 0, 0, 0, 0},
                          });
  const Permutation u = Permutation::from_word(5, {1, 2, 3, 4, 2, 3, 1, 2});
  CHECK(corank_rows(u) == std::vector<std::vector<int>>{
                              {1, 1, 1, 0, 0},
                              {1, 2, 2, 1, 0},
                              {1, 1, 2, 1, 0},
                              {1, 1, 1, 1, 0},
                              {0, 0, 0, 0, 0},
                          });
}

TEST_CASE("essential sets of the worked examples") {
  const auto ess = essential_set(Permutation({5, 2, 4, 1, 3}));
  CHECK(ess == std::vector<EssentialCell>{{1, 4, 1}, {3, 1, 1}, {3, 3, 2}});
  const auto ess2 = essential_set(Permutation::from_word(5, {1, 2, 3, 4, 2, 3, 1, 2}));
  CHECK(ess2 == std::vector<EssentialCell>{{2, 3, 2}, {4, 1, 1}});
}

TEST_CASE("essential set matches the Rothe-diagram corners on S_5") {
  for (const auto& w : oracle::everything(5)) {
    std::vector<std::tuple<int, int, int>> got;
    for (const auto& e : essential_set(w)) got.emplace_back(e.row, e.col, e.corank);
    CHECK(got == oracle::essential(w));
  }
}

TEST_CASE("diagram size is the length") {
  for (const auto& w : oracle::everything(5)) {
    CHECK(static_cast<int>(diagram(w).size()) == oracle::inversions(w));
  }
  CHECK(diagram(Permutation::identity(4)).empty());
  CHECK(essential_set(Permutation::identity(4)).empty());
}

TEST_CASE("co-rank dominance is the Bruhat order") {
  const auto all = oracle::everything(4);
  for (const auto& w : all) {
    const auto interval = oracle::lower_interval(w);
    for (const auto& u : all) CHECK(corank_dominates(u, w) == (interval.count(u) != 0));
  }
}

TEST_CASE("rendering marks graph points, diagram and essential cells") {
  const std::string picture = render_diagram(Permutation({2, 1}));
  CHECK(picture == "[x] o \n o  . \n");
}
