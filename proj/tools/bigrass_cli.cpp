// bigrass: enumeration, tables, figures and self-checks for bigrassmannian
// permutations and the penultimate cell of S_n.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigrass/bigrassmannian.hpp"
#include "bigrass/cells.hpp"
#include "bigrass/fulton.hpp"
#include "bigrass/hecke.hpp"
#include "bigrass/homology.hpp"
#include "bigrass/io.hpp"
#include "bigrass/tetrahedron.hpp"
#include "bigrass/verify.hpp"

using namespace bigrass;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> n;
  std::string format;
  std::string out;
  std::string walls;
  bool force = false;

  // command arguments
  std::string w;
  std::string v;
  std::string x;
  std::string suite = "all";
};

int require_n(const Options& o, int lo = 2, int hi = 9) {
  if (!o.n) throw UsageError("--n is required");
  if (*o.n < lo || *o.n > hi) {
    throw UsageError("--n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return *o.n;
}

std::string pick_format(const Options& o, std::string fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not supported by this command");
}

Permutation read_perm(const std::string& text, const Options& o) {
  Permutation w = parse_permutation(text, o.n);
  if (w.rank() < 2 || w.rank() > 9) throw UsageError("permutation rank must lie in 2..9");
  return w;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// ---------------------------------------------------------------------------

std::string cmd_bigrassmannian(const Options& o) {
  const int n = require_n(o);
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  std::ostringstream os;
  json rows = json::array();
  if (f == "csv") os << "i,j,k,perm,word,length,left_descent,right_descent,phi\n";
  for (const auto& t : bigrassmannian_triples(n)) {
    const Permutation b = b_element(t);
    // Phi is only defined where the cell exists.
    std::string target = n >= 3 ? format_one_line(phi(b).perm) : "";
    const int ld = descents(b, Side::left).front();
    const int rd = descents(b, Side::right).front();
    if (f == "json") {
      json row = to_json(t);
      row["perm"] = format_one_line(b);
      row["word"] = format_word(b);
      row["length"] = length(b);
      row["left_descent"] = ld;
      row["right_descent"] = rd;
      if (n >= 3) row["phi"] = target;
      rows.push_back(row);
    } else if (f == "csv") {
      os << t.i << ',' << t.j << ',' << t.k << ',' << csv_field(format_one_line(b)) << ','
         << format_word(b) << ',' << length(b) << ',' << ld << ',' << rd << ',' << csv_field(target) << '\n';
    } else {
      os << "b(" << t.i << ',' << t.j << ',' << t.k << ")  [" << format_one_line(b) << "]  "
         << format_word(b) << "  length " << length(b) << "  descents (" << ld << ',' << rd << ')';
      if (n >= 3) os << "  phi [" << target << ']';
      os << '\n';
    }
  }
  if (f == "json") os << json{{"n", n}, {"bigrassmannian", rows}}.dump(2) << '\n';
  return os.str();
}

std::string cmd_cell(const Options& o) {
  const int n = require_n(o, 3, 9);
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  std::ostringstream os;
  if (f == "json") {
    json rows = json::array();
    for (const auto& c : penultimate_cell(n)) rows.push_back(to_json(c));
    os << json{{"n", n}, {"a", cell_base_degree(n)}, {"cell", rows}}.dump(2) << '\n';
  } else if (f == "csv") {
    os << "i,j,perm,word,length,d,p\n";
    for (const auto& c : penultimate_cell(n)) {
      os << c.i << ',' << c.j << ',' << csv_field(format_one_line(c.perm)) << ',' << format_word(c.perm)
         << ',' << length(c.perm) << ',' << d_value(n, c.i, c.j) << ','
         << csv_field(closed_form_p(n, c.i, c.j).to_string()) << '\n';
    }
  } else {
    os << "a = " << cell_base_degree(n) << '\n';
    for (const auto& c : penultimate_cell(n)) {
      os << "w(" << c.i << ',' << c.j << ")  [" << format_one_line(c.perm) << "]  " << format_word(c.perm)
         << "  p_e = " << closed_form_p(n, c.i, c.j).to_string() << '\n';
    }
  }
  return os.str();
}

std::string cmd_kl(const Options& o) {
  std::optional<Permutation> w;
  if (!o.w.empty()) w = read_perm(o.w, o);
  const int n = w ? w->rank() : require_n(o, 2, 7);
  if (n > 7) throw UsageError("the KL oracle supports n <= 7");
  if (n > kOracleRankLimit && !o.force) {
    throw UsageError("KL computations above n = " + std::to_string(kOracleRankLimit) + " need --force");
  }
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  KLTable table(n);

  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (w && !o.x.empty()) {
    pairs.emplace_back(read_perm(o.x, o), *w);
    require_same_rank(pairs.back().first, *w);
  } else if (w) {
    const auto element = table.basis_element(*w);
    for (const auto& [x, c] : element.terms()) pairs.emplace_back(x, *w);
  } else {
    if (n < 3) throw UsageError("without a permutation, kl lists the cell and needs n >= 3");
    for (const auto& c : penultimate_cell(n)) pairs.emplace_back(Permutation::identity(n), c.perm);
  }

  std::ostringstream os;
  json rows = json::array();
  if (f == "csv") os << "x,w,p\n";
  for (const auto& [x, y] : pairs) {
    const std::string p = table.p(x, y).to_string();
    if (f == "json") {
      rows.push_back({{"x", format_one_line(x)}, {"w", format_one_line(y)}, {"p", p}});
    } else if (f == "csv") {
      os << csv_field(format_one_line(x)) << ',' << csv_field(format_one_line(y)) << ',' << csv_field(p) << '\n';
    } else {
      os << "p([" << format_one_line(x) << "], [" << format_one_line(y) << "]) = " << p << '\n';
    }
  }
  if (f == "json") os << rows.dump(2) << '\n';
  return os.str();
}

std::string cmd_essential(const Options& o) {
  if (o.w.empty()) throw UsageError("essential needs a permutation");
  const Permutation w = read_perm(o.w, o);
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  std::ostringstream os;
  if (f == "json") {
    os << essential_json(w).dump(2) << '\n';
  } else if (f == "csv") {
    os << "i,j,t\n";
    for (const auto& e : essential_set(w)) os << e.row << ',' << e.col << ',' << e.corank << '\n';
  } else {
    os << render_diagram(w);
    for (const auto& e : essential_set(w)) {
      os << "(" << e.row << ',' << e.col << ")  t = " << e.corank << '\n';
    }
  }
  return os.str();
}

std::string cmd_socle(const Options& o) {
  if (o.w.empty()) throw UsageError("socle needs a permutation");
  const Permutation w = read_perm(o.w, o);
  if (w.rank() < 3) throw UsageError("socle needs n >= 3");
  std::vector<GradedSimple> socle;
  if (!o.v.empty()) {
    const Permutation v = read_perm(o.v, o);
    require_same_rank(v, w);
    if (v == w || !bruhat_leq(v, w)) throw UsageError("socle --v needs v < w in Bruhat order");
    socle = socle_between(v, w);
  } else {
    socle = socle_graded(w);
  }
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  std::ostringstream os;
  if (f == "json") {
    json j = socle_json(w, socle);
    if (!o.v.empty()) j["v"] = format_one_line(read_perm(o.v, o));
    os << j.dump(2) << '\n';
  } else if (f == "csv") {
    os << "i,j,shift,label\n";
    for (const auto& g : socle) {
      os << g.i() << ',' << g.j() << ',' << g.shift << ',' << csv_field(format_one_line(g.cell.perm)) << '\n';
    }
  } else {
    for (const auto& g : socle) {
      os << "(" << g.i() << ", " << g.j() << ", " << g.shift << ")  L[" << format_one_line(g.cell.perm)
         << "]<-" << g.shift << ">\n";
    }
  }
  return os.str();
}

std::vector<int> parse_walls(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad wall '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad wall '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string cmd_ext(const Options& o) {
  const int n = require_n(o, 3, 7);
  const std::string f = pick_format(o, "text", {"text", "csv", "json"});
  const WallSet walls(n, parse_walls(o.walls));

  // Rows: x (longest coset representatives), columns: y (shortest).
  std::vector<Permutation> xs;
  std::vector<Permutation> ys;
  for (const auto& w : all_permutations(n)) {
    if (coset_representative(w, walls, CosetKind::longest) == w) xs.push_back(w);
    if (coset_representative(w, walls, CosetKind::shortest) == w) ys.push_back(w);
  }
  auto value = [&](const Permutation& x, const Permutation& y) {
    return walls.size() == 0 ? ext1_dimension(x, y) : ext1_dimension_singular(x, y, walls);
  };

  std::ostringstream os;
  if (f == "json") {
    json rows = json::array();
    for (const auto& x : xs) {
      json row = json::array();
      for (const auto& y : ys) row.push_back(value(x, y));
      rows.push_back(row);
    }
    json xl = json::array();
    json yl = json::array();
    for (const auto& x : xs) xl.push_back(format_one_line(x));
    for (const auto& y : ys) yl.push_back(format_one_line(y));
    os << json{{"n", n}, {"walls", walls.walls()}, {"x", xl}, {"y", yl}, {"ext1", rows}}.dump(2) << '\n';
  } else if (f == "csv") {
    os << "x,y,dim\n";
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        os << csv_field(format_one_line(x)) << ',' << csv_field(format_one_line(y)) << ',' << value(x, y) << '\n';
      }
    }
  } else {
    os << "rows x, columns y; entry dim Ext^1(L_x, Delta_y)\n";
    os << std::string(static_cast<std::size_t>(2 * n + 1), ' ');
    for (std::size_t c = 0; c < ys.size(); ++c) os << (c % 10);
    os << '\n';
    for (const auto& x : xs) {
      std::string label = format_one_line(x);
      label.resize(static_cast<std::size_t>(2 * n + 1), ' ');
      os << label;
      for (const auto& y : ys) os << value(x, y);
      os << '\n';
    }
  }
  return os.str();
}

std::string cmd_tetrahedron(const Options& o) {
  std::optional<Permutation> w;
  if (!o.w.empty()) w = read_perm(o.w, o);
  const int n = w ? w->rank() : require_n(o, 3, 9);
  if (n < 3) throw UsageError("tetrahedron needs n >= 3");
  const std::string f = pick_format(o, "svg", {"svg", "tikz", "json"});
  const Tetrahedron t = build_tetrahedron(n, w);
  if (f == "json") return tetrahedron_json(t).dump(2) + "\n";
  if (f == "tikz") return tetrahedron_tikz(t);
  return tetrahedron_svg(t);
}

std::string cmd_verify(const Options& o, bool& all_passed) {
  const int n = require_n(o, 3, 9);
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const bool oracle = *suite == Suite::all || *suite == Suite::oracle;
  if (oracle && n > 7) throw UsageError("the oracle suite supports n <= 7");
  if (oracle && n > kOracleRankLimit && !o.force) {
    throw UsageError("the oracle suite above n = " + std::to_string(kOracleRankLimit) + " needs --force");
  }
  const std::string f = pick_format(o, "text", {"text", "json"});
  const auto results = run_verification(n, *suite);
  all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;

  std::ostringstream os;
  if (f == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"suite", r.suite}, {"name", r.name}, {"identity", r.identity},
                      {"passed", r.passed}, {"detail", r.detail}});
    }
    os << json{{"n", n}, {"passed", all_passed}, {"checks", rows}}.dump(2) << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& r : results) {
      os << (r.passed ? "PASS  " : "FAIL  ") << r.suite << '/' << r.name << "  " << r.identity << '\n';
      if (!r.passed && !r.detail.empty()) os << "      " << r.detail << '\n';
      failed += r.passed ? 0 : 1;
    }
    os << results.size() - failed << '/' << results.size() << " checks passed at n = " << n << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigrassmannian permutations, the penultimate cell and socles of Verma cokernels"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "Rank of the symmetric group");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text", "svg", "tikz"}));
  app.add_option("--out", o.out, "Write output to FILE instead of stdout");
  app.add_option("--walls", o.walls, "Comma-separated singular walls, e.g. 1,3");
  app.add_flag("--force", o.force, "Lift the runtime guard on oracle-backed commands");

  auto* bg = app.add_subcommand("bigrassmannian", "List bigrassmannian permutations b(i,j,k)");
  auto* cell = app.add_subcommand("cell", "List the penultimate cell with closed-form p_{e,w}");
  auto* kl = app.add_subcommand("kl", "KL polynomials from the Hecke algebra");
  kl->add_option("w", o.w, "Permutation; omit to list p_{e,w} over the cell");
  kl->add_option("--x", o.x, "Single lower index x");
  auto* ess = app.add_subcommand("essential", "Rothe diagram and essential set");
  ess->add_option("w", o.w, "Permutation")->required();
  auto* soc = app.add_subcommand("socle", "Graded socle of Delta_e/Delta_w or Delta_v/Delta_w");
  soc->add_option("w", o.w, "Permutation")->required();
  soc->add_option("--v", o.v, "Lower permutation v < w");
  auto* ext = app.add_subcommand("ext", "Table of dim Ext^1(L_x, Delta_y)");
  auto* tet = app.add_subcommand("tetrahedron", "Tetrahedron of graded J-subquotients");
  tet->add_option("--w", o.w, "Highlight the factors of Delta_e/Delta_w");
  auto* ver = app.add_subcommand("verify", "Run self-checks");
  ver->add_option("suite", o.suite, "all | counting | oracle | socle | ext");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bool passed = true;
  std::string output;
  try {
    if (*bg) output = cmd_bigrassmannian(o);
    else if (*cell) output = cmd_cell(o);
    else if (*kl) output = cmd_kl(o);
    else if (*ess) output = cmd_essential(o);
    else if (*soc) output = cmd_socle(o);
    else if (*ext) output = cmd_ext(o);
    else if (*tet) output = cmd_tetrahedron(o);
    else if (*ver) output = cmd_verify(o, passed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }

  if (o.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << o.out << '\n';
      return kExitUsage;
    }
    file << output;
  }
  return passed ? kExitOk : kExitFailed;
}
