#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "babcubic/solvers.hpp"

namespace babcubic {

enum class ProblemType { PureCubic, Depressed, No5, WellDiff, WellSum, Wang };

std::string_view problem_type_name(ProblemType t);

using ProblemData =
    std::variant<PureCubicProblem, DepressedCubicProblem, No5Problem, WellProblem, WangProblem>;

/// A parsed `.problem` file. `claims` are attested answers (claimed_<name>
/// keys) that the solution is checked against.
struct Problem {
  ProblemType type = ProblemType::PureCubic;
  ProblemData data;
  std::vector<NamedValue> claims;
};

// Line-oriented `key = value`; '#' comments. Keys: type, volume,
// area_plus_volume, length_diff_width, length_plus_width, c, c2, rhs, P, S,
// conversion, claimed_<name>. Unknown, duplicate, missing or inapplicable
// keys are parse errors.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

struct ProblemOverrides {
  std::optional<ExactNumber> conversion;
  std::optional<SearchBounds> bounds;
};

// Conversion applies to problems with a metrology, bounds to the depressed
// cubic search.
void apply_overrides(Problem& p, const ProblemOverrides& o);

// Dispatches to the matching solver and checks claims.
Solution solve(const Problem& p);

}  // namespace babcubic
