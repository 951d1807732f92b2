#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "babcubic/exact_number.hpp"
#include "babcubic/solvers.hpp"

namespace babcubic {

// Independent checks for the solvers. Nothing here calls into the tables or
// factorization code; candidates come from the rational root theorem and
// square roots from the integer square root.

/// c3 x^3 + c2 x^2 + c1 x + c0 = 0, with c3 != 0.
struct CubicCoefficients {
  ExactNumber c3;
  ExactNumber c2;
  ExactNumber c1;
  ExactNumber c0;

  ExactNumber evaluate(const ExactNumber& x) const;
};

// Exactly the rational roots, complete by the rational root theorem.
std::set<ExactNumber> rational_roots_cubic(const CubicCoefficients& c);

// r >= 0 with r^2 == v, or nullopt when v is not a rational square.
std::optional<ExactNumber> exact_sqrt(const ExactNumber& v);

struct WellAnswer {
  ExactNumber x;
  ExactNumber y;
  ExactNumber z;
  friend bool operator==(const WellAnswer&, const WellAnswer&) = default;
};

struct IrrationalSolution {
  ExactNumber discriminant;
};

// Positive rational (x, y, z) candidates, length first when both orders work.
using QuadraticOutcome = std::variant<std::vector<WellAnswer>, IrrationalSolution>;

// Solves xy = W - V together with the side constraint, z = conversion * x.
// NonPositiveProduct when W <= V.
QuadraticOutcome quadratic_reduction(const WellProblem& p);

// The cubic in x alone that each problem family reduces to.
CubicCoefficients eliminated_cubic(const PureCubicProblem& p);
CubicCoefficients eliminated_cubic(const DepressedCubicProblem& p);
CubicCoefficients eliminated_cubic(const No5Problem& p);
CubicCoefficients eliminated_cubic(const WellProblem& p);
CubicCoefficients eliminated_cubic(const WangProblem& p);

}  // namespace babcubic
