#pragma once

// Text and JSON forms.
//   permutation, one-line:  "5,2,4,1,3"
//   permutation, word:      "s3 s4 s1 s2 s3 s2 s1"  (rank from context)
//   identity:               "e"                     (rank from context)
// JSON objects use matrix coordinates (i = row, j = column).

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bigrass/bigrassmannian.hpp"
#include "bigrass/fulton.hpp"
#include "bigrass/homology.hpp"

namespace bigrass {

/// Parses either syntax. Word syntax and "e" need `rank`; for one-line
/// input a given rank must agree. Throws std::invalid_argument.
Permutation parse_permutation(std::string_view text, std::optional<int> rank = std::nullopt);

std::string format_one_line(const Permutation& w);
/// Canonical reduced word, "e" for the identity.
std::string format_word(const Permutation& w);

nlohmann::json to_json(const GradedSimple& g);
nlohmann::json to_json(const CellElement& c);
nlohmann::json to_json(const EssentialCell& e);
nlohmann::json to_json(const BigrassTriple& t);

/// {"w": "...", "socle": [{"i":..,"j":..,"shift":..}, ...]}
nlohmann::json socle_json(const Permutation& w, const std::vector<GradedSimple>& socle);
/// {"ess": [{"i":..,"j":..,"t":..}, ...]}
nlohmann::json essential_json(const Permutation& w);

}  // namespace bigrass
