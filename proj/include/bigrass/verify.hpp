#pragma once

// Self-checks over one rank, grouped into suites. Each check compares two
// independent computations of the same quantity (closed formula against the
// Hecke-algebra oracle, essential-set socle against Bruhat-maximal socle,
// co-rank Bruhat order against subword matching, ...).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bigrass {

enum class Suite { all, counting, oracle, socle, ext };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckResult {
  std::string suite;
  std::string name;
  std::string identity;  // what is being compared, in words
  bool passed = true;
  std::string detail;    // first counterexample when failing, summary otherwise
};

/// Largest rank for which the oracle suite runs without an explicit override.
inline constexpr int kOracleRankLimit = 6;

/// Runs `suite` at rank n (3 <= n <= 9; the oracle suite needs n <= 7).
std::vector<CheckResult> run_verification(int n, Suite suite);

}  // namespace bigrass
