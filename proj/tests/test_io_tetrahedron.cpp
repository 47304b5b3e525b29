#include <doctest.h>

#include <fstream>

#include "bigrass/io.hpp"
#include "bigrass/tetrahedron.hpp"
#include "oracles.hpp"

using namespace bigrass;
using nlohmann::json;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(BIGRASS_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

json point_list(const Tetrahedron& t, std::optional<PointRole> role = std::nullopt) {
  json out = json::array();
  for (std::size_t p = 0; p < t.points.size(); ++p) {
    if (role && t.roles[p] != *role) continue;
    out.push_back({t.points[p].i, t.points[p].j, t.points[p].k});
  }
  return out;
}

json edge_list(const Tetrahedron& t) {
  json out = json::array();
  for (const auto& e : t.edges) out.push_back({{e.a.i, e.a.j, e.a.k}, {e.b.i, e.b.j, e.b.k}});
  return out;
}

}  // namespace

TEST_CASE("parsing permutations") {
  CHECK(parse_permutation("5,2,4,1,3") == Permutation({5, 2, 4, 1, 3}));
  CHECK(parse_permutation(" 5, 2,4 ,1,3 ") == Permutation({5, 2, 4, 1, 3}));
  CHECK(parse_permutation("s3 s4 s1 s2 s3 s2 s1", 5) == Permutation({5, 2, 4, 1, 3}));
  CHECK(parse_permutation("s3s4s1s2s3s2s1", 5) == Permutation({5, 2, 4, 1, 3}));
  CHECK(parse_permutation("e", 3) == Permutation::identity(3));
  CHECK_THROWS_AS(parse_permutation("s1 s2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("s4", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,2,3", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,x"), std::invalid_argument);
}

TEST_CASE("formatting round-trips") {
  for (const auto& w : oracle::everything(4)) {
    CHECK(parse_permutation(format_one_line(w)) == w);
    CHECK(parse_permutation(format_word(w), 4) == w);
  }
  CHECK(format_word(Permutation::identity(3)) == "e");
  CHECK(format_one_line(Permutation({2, 3, 1})) == "2,3,1");
}

TEST_CASE("JSON shapes") {
  const Permutation w{5, 2, 4, 1, 3};
  const json s = socle_json(w, socle_graded(w));
  CHECK(s["w"] == "5,2,4,1,3");
  CHECK(s["socle"].size() == 3);
  CHECK(s["socle"][0] == json{{"i", 4}, {"j", 1}, {"shift", 9}});
  const json e = essential_json(w);
  CHECK(e["ess"][2] == json{{"i", 3}, {"j", 3}, {"t", 2}});
  const json c = to_json(cell_element(4, 2, 2));
  CHECK(c["p"] == "v^5 + v^3");
  CHECK(c["length"] == 5);
  CHECK(json::parse(s.dump()) == s);
}

TEST_CASE("tetrahedra match the reference drawings") {
  for (int n = 3; n <= 5; ++n) {
    const json golden = load("tetra_n" + std::to_string(n) + ".json");
    const auto t = build_tetrahedron(n);
    CHECK(point_list(t) == golden["points"]);
    CHECK(edge_list(t) == golden["edges"]);
    const json dumped = tetrahedron_json(t);
    CHECK(dumped["points"].size() == golden["points"].size());
    CHECK(dumped["edges"] == golden["edges"]);
  }
}

TEST_CASE("highlighted tetrahedra match the reference drawings") {
  for (const auto& g : load("highlighted.json")) {
    const int n = g["n"];
    const auto w = parse_permutation(g["w"].get<std::string>(), n);
    const auto t = build_tetrahedron(n, w);
    CHECK(point_list(t, PointRole::red) == g["red"]);
    CHECK(point_list(t, PointRole::black) == g["black"]);
    CHECK(point_list(t, PointRole::white) == g["white"]);
    CHECK(edge_list(t) == g["edges"]);
  }
}

TEST_CASE("renderings are deterministic and well formed") {
  const auto t = build_tetrahedron(4, Permutation::from_word(4, {1, 2, 1}));
  CHECK(tetrahedron_svg(t) == tetrahedron_svg(build_tetrahedron(4, Permutation::from_word(4, {1, 2, 1}))));
  const auto svg = tetrahedron_svg(t);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("fill=\"red\"") != std::string::npos);
  const auto tikz = tetrahedron_tikz(build_tetrahedron(3));
  CHECK(tikz.find("\\draw (1, 1, -1) -- (1, 2, -2);") != std::string::npos);
  CHECK_THROWS_AS(build_tetrahedron(2), std::invalid_argument);
}
