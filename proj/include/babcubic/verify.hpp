#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "babcubic/oracle.hpp"
#include "babcubic/problem.hpp"

namespace babcubic {

/// Outcome of solving a problem and checking it against the oracle.
struct VerificationReport {
  std::optional<Solution> solution;
  std::optional<ErrorCode> failure;
  std::string failure_message;
  CubicCoefficients cubic;
  std::set<ExactNumber> oracle_roots;  // positive rational roots only
  std::optional<QuadraticOutcome> quadratic;  // well problems
  bool agrees = false;
  std::vector<std::string> findings;
};

// A solved problem agrees when the oracle's roots contain the solver's x
// (and, for wells, the quadratic reduction yields the same triple). A failed
// one agrees when the oracle finds no positive rational root either.
VerificationReport verify(const Problem& p);

}  // namespace babcubic
