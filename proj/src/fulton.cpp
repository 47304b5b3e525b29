#include "bigrass/fulton.hpp"

#include <algorithm>
#include <sstream>

namespace bigrass {

RankTable::RankTable(const Permutation& w) : n_(w.rank()), r_(static_cast<std::size_t>(n_ * n_), 0) {
  // Row i of r is row i-1 plus the indicator of columns >= w(i).
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const int above = i > 1 ? r_[index(i - 1, j)] : 0;
      r_[index(i, j)] = above + (w(i) <= j ? 1 : 0);
    }
  }
}

int RankTable::t(int i, int j) const { return std::min(i, j) - r(i, j); }

RankTable rank_table(const Permutation& w) { return RankTable(w); }

std::vector<Cell> diagram(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<Cell> out;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = 1; j <= w.rank(); ++j) {
      if (j < w(i) && i < inv(j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<EssentialCell> essential_set(const Permutation& w) {
  const Permutation inv = w.inverse();
  const RankTable table(w);
  std::vector<EssentialCell> out;
  const int n = w.rank();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i < inv(j) && j < w(i) && w(i + 1) <= j && inv(j + 1) <= i) {
        out.push_back({i, j, table.t(i, j)});
      }
    }
  }
  return out;
}

bool corank_dominates(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  const RankTable tu(u);
  const RankTable tw(w);
  const int n = u.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (tu.r(i, j) < tw.r(i, j)) return false;
    }
  }
  return true;
}

std::string render_diagram(const Permutation& w) {
  const auto cells = diagram(w);
  const auto ess = essential_set(w);
  std::ostringstream os;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = 1; j <= w.rank(); ++j) {
      const bool in_diagram = std::binary_search(cells.begin(), cells.end(), Cell{i, j});
      const bool essential = std::any_of(ess.begin(), ess.end(), [&](const EssentialCell& e) {
        return e.row == i && e.col == j;
      });
      if (w(i) == j) {
        os << " o ";
      } else if (essential) {
        os << "[x]";
      } else if (in_diagram) {
        os << " x ";
      } else {
        os << " . ";
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bigrass
