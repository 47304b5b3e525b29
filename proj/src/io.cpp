#include "bigrass/io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace bigrass {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw std::invalid_argument("cannot parse '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

int require_rank(std::optional<int> rank, std::string_view text) {
  if (!rank) throw std::invalid_argument("rank needed to interpret '" + std::string(text) + "'");
  return *rank;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> rank) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty permutation");

  if (s == "e") return Permutation::identity(require_rank(rank, s));

  if (s.front() == 's') {
    const int n = require_rank(rank, s);
    std::vector<int> gens;
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*')) ++pos;
      if (pos == s.size()) break;
      if (s[pos] != 's') throw std::invalid_argument("expected generator in '" + std::string(s) + "'");
      ++pos;
      if (pos < s.size() && s[pos] == '_') ++pos;
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      gens.push_back(to_int(s.substr(pos, end - pos), s));
      pos = end;
    }
    return Permutation::from_word(n, gens);
  }

  std::vector<int> word;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    word.push_back(to_int(trim(s.substr(pos, end - pos)), s));
    pos = end + 1;
  }
  Permutation w(word);
  if (rank && *rank != w.rank()) {
    throw std::invalid_argument("'" + std::string(s) + "' has rank " + std::to_string(w.rank()) +
                                ", expected " + std::to_string(*rank));
  }
  return w;
}

std::string format_one_line(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

std::string format_word(const Permutation& w) {
  const auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string out;
  for (int g : word) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(g);
  }
  return out;
}

nlohmann::json to_json(const GradedSimple& g) {
  return {{"i", g.i()}, {"j", g.j()}, {"shift", g.shift}};
}

nlohmann::json to_json(const CellElement& c) {
  return {{"i", c.i},
          {"j", c.j},
          {"perm", format_one_line(c.perm)},
          {"length", length(c.perm)},
          {"p", closed_form_p(c.n, c.i, c.j).to_string()}};
}

nlohmann::json to_json(const EssentialCell& e) { return {{"i", e.row}, {"j", e.col}, {"t", e.corank}}; }

nlohmann::json to_json(const BigrassTriple& t) { return {{"i", t.i}, {"j", t.j}, {"k", t.k}}; }

nlohmann::json socle_json(const Permutation& w, const std::vector<GradedSimple>& socle) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& g : socle) entries.push_back(to_json(g));
  return {{"w", format_one_line(w)}, {"socle", entries}};
}

nlohmann::json essential_json(const Permutation& w) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : essential_set(w)) entries.push_back(to_json(e));
  return {{"w", format_one_line(w)}, {"ess", entries}};
}

}  // namespace bigrass
