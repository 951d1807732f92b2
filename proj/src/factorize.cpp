#include "babcubic/factorize.hpp"

#include <algorithm>
#include <string>

#include "babcubic/sexagesimal.hpp"

namespace babcubic {

namespace {

Integer n2_times_n_plus_q(std::uint64_t n, std::int64_t q) {
  Integer v = n;
  return v * v * (v + q);
}

std::string pair_text(const PairResult& p) {
  return "(" + render_or_fraction(p.x) + ", " + render_or_fraction(p.y) + ")";
}

}  // namespace

std::uint64_t factor_n2_times_n_plus_q(const Integer& target, std::int64_t q,
                                       SearchBounds bounds) {
  bounds.validate();
  auto not_found = [&]() -> Error {
    return Error(ErrorCode::NotFound,
                 "no n with n^2(n " + std::string(q < 0 ? "- " : "+ ") +
                     std::to_string(q < 0 ? -q : q) + ") = " + target.str());
  };
  if (target < 1) throw not_found();

  // Smallest n on the monotone branch: n > -q (so n + q > 0) and n > -2q/3.
  std::uint64_t start = 1;
  if (q < 0) {
    std::uint64_t neg = static_cast<std::uint64_t>(-q);
    start = std::max(start, neg + 1);
  }
  std::uint64_t lo = std::max(bounds.lower, start);
  std::uint64_t hi = bounds.upper;
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    Integer v = n2_times_n_plus_q(mid, q);
    if (v == target) return mid;
    if (v < target) {
      lo = mid + 1;
    } else {
      if (mid == 0) break;
      hi = mid - 1;
    }
  }
  throw not_found();
}

std::vector<PairResult> scan_pair_sum_constrained(const Integer& scaled_target,
                                                  std::uint64_t granularity,
                                                  const ExactNumber& sum) {
  if (granularity < 1 || sum.sign() <= 0) {
    throw Error(ErrorCode::MalformedQuery, "granularity and sum must be positive");
  }
  ExactNumber total = sum * ExactNumber(Integer(granularity));
  if (!total.is_integer()) {
    throw Error(ErrorCode::MalformedQuery,
                "sum " + render_or_fraction(sum) + " is not a whole number of 1/" +
                    std::to_string(granularity) + " steps");
  }
  const Integer steps = total.numerator();
  const Integer g = granularity;
  std::vector<PairResult> found;
  for (Integer p = 1; p < steps; ++p) {
    if (p * p * (steps - p) == scaled_target) {
      found.push_back({ExactNumber(p, g), ExactNumber(steps - p, g)});
    }
  }
  return found;
}

PairResult factor_pair_sum_constrained(const Integer& scaled_target,
                                       std::uint64_t granularity,
                                       const ExactNumber& sum) {
  if (scaled_target < 1) {
    throw Error(ErrorCode::MalformedQuery, "target must be at least 1");
  }
  std::vector<PairResult> raw =
      scan_pair_sum_constrained(scaled_target, granularity, sum);
  std::vector<PairResult> ordered;
  std::copy_if(raw.begin(), raw.end(), std::back_inserter(ordered),
               [](const PairResult& r) { return r.x >= r.y; });

  if (raw.empty()) {
    throw Error(ErrorCode::NotFound,
                "no X = p/" + std::to_string(granularity) + " with X^2 Y = " +
                    scaled_target.str() + "/" + std::to_string(granularity) + "^3");
  }
  if (ordered.size() > 1) {
    std::string list;
    for (const auto& r : ordered) list += " " + pair_text(r);
    throw PairSearchError(ErrorCode::MultipleSolutions,
                          "several pairs with X >= Y:" + list, ordered);
  }
  if (ordered.empty()) {
    std::string list;
    for (const auto& r : raw) list += " " + pair_text(r);
    throw PairSearchError(ErrorCode::ConventionViolation,
                          "only pairs with X < Y exist:" + list, raw);
  }
  return ordered.front();
}

std::map<Integer, unsigned> prime_factorize(const Integer& n) {
  if (n < 1) throw Error(ErrorCode::ZeroInput, "factorization needs a positive integer");
  std::map<Integer, unsigned> factors;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++factors[p];
      rest /= p;
    }
  }
  if (rest > 1) ++factors[rest];
  return factors;
}

}  // namespace babcubic
