#pragma once

// The tetrahedron of graded J-subquotients of the dominant Verma module and
// its renderings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigrass/permutation.hpp"

namespace bigrass {

struct TetraPoint {
  int i;
  int j;
  int k;
  friend auto operator<=>(const TetraPoint&, const TetraPoint&) = default;
};

struct TetraEdge {
  TetraPoint a;
  TetraPoint b;  // a < b
  friend auto operator<=>(const TetraEdge&, const TetraEdge&) = default;
};

/// white: factor of Delta_w, black: factor of Delta_e/Delta_w outside the
/// socle, red: socle of Delta_e/Delta_w.
enum class PointRole { plain, white, black, red };

struct Tetrahedron {
  int n;
  std::vector<TetraPoint> points;  // sorted
  std::vector<TetraEdge> edges;    // sorted
  std::vector<PointRole> roles;    // parallel to points
};

/// Points (i, j, k) for every exponent k of p_{e,w_{i,j}}; an edge joins two
/// points with |i-i'| + |j-j'| = 1 and |k-k'| = 1. With `highlight`, points
/// are coloured by their role for Delta_e/Delta_w and only edges between
/// non-white points are kept. Requires n >= 3.
Tetrahedron build_tetrahedron(int n, const std::optional<Permutation>& highlight = std::nullopt);

nlohmann::json tetrahedron_json(const Tetrahedron& t);
std::string tetrahedron_tikz(const Tetrahedron& t);
std::string tetrahedron_svg(const Tetrahedron& t);

}  // namespace bigrass
