#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "babcubic/error.hpp"
#include "babcubic/exact_number.hpp"
#include "babcubic/tables.hpp"

namespace babcubic {

/// Conversion constants ("bal"): horizontal lengths are taken as-is, depths
/// are counted in kùš at 12 per nindan.
struct Metrology {
  ExactNumber horizontal = 1;
  ExactNumber vertical = 12;
  std::string length_unit = "nindan";
  std::string depth_unit = "kùš";
  std::string volume_unit = "sar";

  void validate() const;
};

struct TraceStep {
  std::string label;
  ExactNumber value;
  std::string description;
};

struct NamedValue {
  std::string name;
  ExactNumber value;
  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

/// Answers of a solved problem together with the intermediate values in
/// tablet order. `roots` holds the values a tablet calls its roots.
struct Solution {
  std::vector<NamedValue> values;
  std::vector<NamedValue> roots;
  std::vector<TraceStep> trace;
  std::vector<std::string> notes;
  std::string conclusion;

  // Throws NotFound for an unknown name.
  const ExactNumber& value(std::string_view name) const;
  std::optional<ExactNumber> find(std::string_view name) const;
  std::vector<ExactNumber> trace_values() const;
  std::vector<ExactNumber> root_values() const;
};

struct PureCubicProblem {
  ExactNumber volume;
  Metrology metrology;
};

struct DepressedCubicProblem {
  ExactNumber c;
  ExactNumber rhs;
  SearchBounds bounds;
};

struct No5Problem {
  ExactNumber c3;
  ExactNumber c2;
  ExactNumber rhs;
  Metrology metrology;
};

enum class SideConstraint { Difference, Sum };

/// z = vertical * x, xyz = volume, xy + xyz = area_plus_volume, and either
/// x - y = side or x + y = side.
struct WellProblem {
  ExactNumber volume;
  ExactNumber area_plus_volume;
  SideConstraint constraint = SideConstraint::Difference;
  ExactNumber side;
  Metrology metrology;
};

/// x^2 + y^2 = z^2, xy = product, z - x = difference.
struct WangProblem {
  ExactNumber product;
  ExactNumber difference;
  std::int64_t q_max = 1000;
};

// V = vertical * x^3.
Solution solve_pure_cubic(const ExactNumber& volume, const Metrology& m = {});

/// A nearby right-hand side that would have been solvable.
struct Repair {
  std::int64_t delta;
  ExactNumber rhs;
  ExactNumber x;
};

class NoRationalSolutionError : public Error {
 public:
  NoRationalSolutionError(const std::string& message, std::vector<Repair> repairs)
      : Error(ErrorCode::NoRationalSolution, message), repairs_(std::move(repairs)) {}

  const std::vector<Repair>& repairs() const noexcept { return repairs_; }

 private:
  std::vector<Repair> repairs_;
};

// "+2 → 33,22 solves with x = 5;30"
std::string describe_repair(const Repair& r);

// Smallest m in 1..ceil(60 c) with m^2/c and m^3/c integral; nullopt if none.
std::optional<std::int64_t> depressed_scaling(const ExactNumber& c);

// c x^3 + x = rhs through u = m x, u^3 + (m^2/c) u = (m^3/c) rhs. On failure
// throws NoRationalSolutionError listing right-hand sides rhs + delta,
// 0 < |delta| <= 4, that the same procedure solves.
Solution solve_depressed_cubic(const ExactNumber& c, const ExactNumber& rhs,
                               SearchBounds bounds = SearchBounds::defaults());

// c3 x^3 + c2 x^2 = rhs with c3 = c2 * vertical, reduced to z^3 + z^2 = N
// by the factor vertical^2 / c2, z = vertical * x.
Solution solve_no5_style(const ExactNumber& c3, const ExactNumber& c2,
                         const ExactNumber& rhs, const Metrology& m = {});

Solution solve_well_difference(const WellProblem& p);
Solution solve_well_sum(const WellProblem& p);
Solution solve_well(const WellProblem& p);

struct X3Ax2Result {
  ExactNumber x;
  ExactNumber scale;
  std::int64_t q;
  std::uint64_t n;
  Integer reduced_target;
};

// x^3 + a x^2 = b by x = (a/q) n with n^2 (n + q) = b / (a/q)^3 integral.
// Tries q = 1 .. q_max in order. NoScaleFound when no q makes the reduced
// target integral, NotFound when no such q yields a factorization.
X3Ax2Result solve_x3_ax2(const ExactNumber& a, const ExactNumber& b,
                         std::int64_t q_max = 1000);

Solution solve_wang_system(const WangProblem& p);

// Compares attested values against a solution and records a note for each
// disagreement. Returns the number of disagreements.
std::size_t check_claims(Solution& s, const std::vector<NamedValue>& claims);

}  // namespace babcubic
