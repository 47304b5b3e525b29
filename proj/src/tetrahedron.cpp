#include "bigrass/tetrahedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "bigrass/cells.hpp"
#include "bigrass/homology.hpp"

namespace bigrass {

namespace {

bool lattice_adjacent(const TetraPoint& a, const TetraPoint& b) {
  return std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1 && std::abs(a.k - b.k) == 1;
}

bool contains(const std::vector<GradedSimple>& set, const TetraPoint& p) {
  return std::any_of(set.begin(), set.end(), [&](const GradedSimple& g) {
    return g.i() == p.i && g.j() == p.j && g.shift == p.k;
  });
}

const char* role_name(PointRole r) {
  switch (r) {
    case PointRole::white: return "white";
    case PointRole::black: return "black";
    case PointRole::red: return "red";
    case PointRole::plain: break;
  }
  return "plain";
}

}  // namespace

Tetrahedron build_tetrahedron(int n, const std::optional<Permutation>& highlight) {
  if (n < 3) throw std::invalid_argument("tetrahedron requires n >= 3");
  if (highlight && highlight->rank() != n) throw std::invalid_argument("highlight rank mismatch");
  Tetrahedron t{n, {}, {}, {}};
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      for (int k : closed_form_p(n, i, j).support()) t.points.push_back({i, j, k});
    }
  }
  std::sort(t.points.begin(), t.points.end());

  t.roles.assign(t.points.size(), PointRole::plain);
  if (highlight) {
    const auto factors = j_subquotients(*highlight);
    const auto socle = socle_graded(*highlight);
    for (std::size_t p = 0; p < t.points.size(); ++p) {
      if (contains(socle, t.points[p])) {
        t.roles[p] = PointRole::red;
      } else if (contains(factors, t.points[p])) {
        t.roles[p] = PointRole::black;
      } else {
        t.roles[p] = PointRole::white;
      }
    }
  }

  for (std::size_t a = 0; a < t.points.size(); ++a) {
    for (std::size_t b = a + 1; b < t.points.size(); ++b) {
      if (!lattice_adjacent(t.points[a], t.points[b])) continue;
      if (t.roles[a] == PointRole::white || t.roles[b] == PointRole::white) continue;
      t.edges.push_back({t.points[a], t.points[b]});
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

nlohmann::json tetrahedron_json(const Tetrahedron& t) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t p = 0; p < t.points.size(); ++p) {
    nlohmann::json entry = {{"i", t.points[p].i}, {"j", t.points[p].j}, {"k", t.points[p].k}};
    if (t.roles[p] != PointRole::plain) entry["role"] = role_name(t.roles[p]);
    points.push_back(entry);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : t.edges) {
    edges.push_back({{e.a.i, e.a.j, e.a.k}, {e.b.i, e.b.j, e.b.k}});
  }
  return {{"n", t.n}, {"points", points}, {"edges", edges}};
}

std::string tetrahedron_tikz(const Tetrahedron& t) {
  // Same coordinates as the usual tikz-3dplot drawing: z = -k, so the
  // deepest layer ends up at the bottom.
  auto coord = [](const TetraPoint& p) {
    return "(" + std::to_string(p.i) + ", " + std::to_string(p.j) + ", " + std::to_string(-p.k) + ")";
  };
  std::ostringstream os;
  os << "\\tdplotsetmaincoords{110}{130}\n";
  os << "\\begin{tikzpicture}[tdplot_main_coords, scale=1.4]\n";
  for (const auto& e : t.edges) os << "\\draw " << coord(e.a) << " -- " << coord(e.b) << ";\n";
  for (std::size_t p = 0; p < t.points.size(); ++p) {
    const auto& pt = t.points[p];
    const std::string label = "{\\tiny $(" + std::to_string(pt.i) + ", " + std::to_string(pt.j) +
                              ", " + std::to_string(pt.k) + ")$}";
    switch (t.roles[p]) {
      case PointRole::red:
        os << "\\draw[fill=red] " << coord(pt) << " circle (2.0pt) node[anchor=west] " << label << ";\n";
        break;
      case PointRole::white:
        os << "\\draw[fill=white] " << coord(pt) << " circle (1.5pt);\n";
        break;
      default:
        os << "\\filldraw[black] " << coord(pt) << " circle (1.5pt) node[anchor=west] " << label << ";\n";
        break;
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string tetrahedron_svg(const Tetrahedron& t) {
  // Oblique projection with the degree axis pointing down.
  constexpr int kStep = 60;
  constexpr int kDepth = 22;
  constexpr int kLayer = 55;
  constexpr int kMargin = 40;
  int k_min = t.points.front().k;
  int k_max = k_min;
  for (const auto& p : t.points) {
    k_min = std::min(k_min, p.k);
    k_max = std::max(k_max, p.k);
  }
  const int m = t.n - 1;
  auto sx = [&](const TetraPoint& p) { return kMargin + (p.j - p.i + m - 1) * kStep; };
  auto sy = [&](const TetraPoint& p) { return kMargin + (p.i + p.j - 2) * kDepth + (p.k - k_min) * kLayer; };
  const int width = 2 * kMargin + 2 * (m - 1) * kStep + 60;
  const int height = 2 * kMargin + 2 * (m - 1) * kDepth + (k_max - k_min) * kLayer;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (const auto& e : t.edges) {
    os << "  <line x1=\"" << sx(e.a) << "\" y1=\"" << sy(e.a) << "\" x2=\"" << sx(e.b) << "\" y2=\""
       << sy(e.b) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t p = 0; p < t.points.size(); ++p) {
    const auto& pt = t.points[p];
    const char* fill = t.roles[p] == PointRole::red     ? "red"
                       : t.roles[p] == PointRole::white ? "white"
                                                        : "black";
    os << "  <circle cx=\"" << sx(pt) << "\" cy=\"" << sy(pt) << "\" r=\""
       << (t.roles[p] == PointRole::red ? 6 : 4) << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << sx(pt) + 8 << "\" y=\"" << sy(pt) - 6
       << "\" font-size=\"10\" font-family=\"sans-serif\">(" << pt.i << ", " << pt.j << ", " << pt.k
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bigrass
