#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "babcubic/error.hpp"
#include "babcubic/exact_number.hpp"
#include "babcubic/tables.hpp"

namespace babcubic {

/// A pair (X, Y) with X + Y fixed, reported with X >= Y.
struct PairResult {
  ExactNumber x;
  ExactNumber y;
  friend bool operator==(const PairResult&, const PairResult&) = default;
};

/// MultipleSolutions or ConventionViolation outcome of the pair search,
/// carrying every raw pair the scan found.
class PairSearchError : public Error {
 public:
  PairSearchError(ErrorCode code, const std::string& message,
                  std::vector<PairResult> candidates)
      : Error(code, message), candidates_(std::move(candidates)) {}

  const std::vector<PairResult>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<PairResult> candidates_;
};

// n with n^2 (n + q) == target. The search runs on the branch where the
// map is strictly increasing and n + q > 0, i.e. n > max(0, -q, -2q/3),
// intersected with `bounds`.
std::uint64_t factor_n2_times_n_plus_q(const Integer& target, std::int64_t q,
                                       SearchBounds bounds = SearchBounds::defaults());

// Exhaustive scan over X = p/g, Y = sum - p/g, p = 1 .. sum*g - 1, for
// p^2 (sum*g - p) == scaled_target, i.e. X^2 Y == scaled_target / g^3.
// Returns the single pair with X >= Y. Errors: MalformedQuery when sum*g is
// not a positive integer, NotFound, MultipleSolutions, ConventionViolation
// (only X < Y solutions exist; the raw pairs are carried, never reordered).
PairResult factor_pair_sum_constrained(const Integer& scaled_target,
                                       std::uint64_t granularity,
                                       const ExactNumber& sum);

// Every p in the scan satisfying the equation, in increasing p. No
// convention filtering.
std::vector<PairResult> scan_pair_sum_constrained(const Integer& scaled_target,
                                                  std::uint64_t granularity,
                                                  const ExactNumber& sum);

// Trial division. 1 maps to the empty factorization.
std::map<Integer, unsigned> prime_factorize(const Integer& n);

}  // namespace babcubic
