#include "babcubic/oracle.hpp"

#include <array>

#include "babcubic/error.hpp"

namespace babcubic {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n.sign() < 0) n = -n;
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer evaluate_scaled(const std::vector<Integer>& coeffs, const Integer& p,
                        const Integer& q) {
  // sum a_i p^(deg-i) q^i, Horner in two variables; coeffs high to low.
  Integer acc = 0;
  Integer qpow = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = acc * p + coeffs[i] * qpow;
    qpow *= q;
  }
  return acc;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

ExactNumber CubicCoefficients::evaluate(const ExactNumber& x) const {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

std::set<ExactNumber> rational_roots_cubic(const CubicCoefficients& c) {
  if (c.c3.is_zero()) {
    throw Error(ErrorCode::MalformedQuery, "leading coefficient must be nonzero");
  }
  const std::array<const ExactNumber*, 4> in{&c.c3, &c.c2, &c.c1, &c.c0};
  Integer common = 1;
  for (const auto* v : in) common = lcm(common, v->denominator());
  std::vector<Integer> coeffs;
  for (const auto* v : in) coeffs.push_back(v->numerator() * (common / v->denominator()));

  std::set<ExactNumber> roots;
  while (coeffs.back().is_zero()) {
    roots.insert(ExactNumber(0));
    coeffs.pop_back();
  }
  if (coeffs.size() == 1) return roots;

  const std::vector<Integer> ps = positive_divisors(coeffs.back());
  const std::vector<Integer> qs = positive_divisors(coeffs.front());
  // p/q in lowest terms is a root iff sum a_i p^(deg-i) q^i == 0.
  for (const Integer& p : ps) {
    for (const Integer& q : qs) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      for (const Integer& signed_p : {p, Integer(-p)}) {
        if (evaluate_scaled(coeffs, signed_p, q).is_zero()) {
          roots.insert(ExactNumber(signed_p, q));
        }
      }
    }
  }
  return roots;
}

std::optional<ExactNumber> exact_sqrt(const ExactNumber& v) {
  if (v.sign() < 0) throw Error(ErrorCode::NegativeInput, "square root of a negative number");
  auto n = integer_sqrt_exact(v.numerator());
  auto d = integer_sqrt_exact(v.denominator());
  if (!n || !d) return std::nullopt;
  return ExactNumber(*n, *d);
}

QuadraticOutcome quadratic_reduction(const WellProblem& p) {
  const ExactNumber product = p.area_plus_volume - p.volume;
  if (product.sign() <= 0) {
    throw Error(ErrorCode::NonPositiveProduct,
                "area plus volume must exceed the volume for xy > 0");
  }
  const ExactNumber& s = p.side;
  const ExactNumber two(2);
  const ExactNumber four(4);
  std::vector<WellAnswer> answers;
  auto accept = [&](const ExactNumber& x, const ExactNumber& y) {
    if (x.sign() > 0 && y.sign() > 0) {
      answers.push_back({x, y, x * p.metrology.vertical});
    }
  };

  if (p.constraint == SideConstraint::Difference) {
    // x - y = s, xy = P: x^2 - s x - P = 0.
    const ExactNumber disc = s * s + four * product;
    auto root = exact_sqrt(disc);
    if (!root) return IrrationalSolution{disc};
    const ExactNumber x = (s + *root) / two;
    accept(x, x - s);
    const ExactNumber x2 = (s - *root) / two;
    accept(x2, x2 - s);
  } else {
    // x + y = s, xy = P: t^2 - s t + P = 0, x and y are the two roots.
    const ExactNumber disc = s * s - four * product;
    if (disc.sign() < 0) return IrrationalSolution{disc};
    auto root = exact_sqrt(disc);
    if (!root) return IrrationalSolution{disc};
    const ExactNumber big = (s + *root) / two;
    const ExactNumber small = (s - *root) / two;
    accept(big, small);
    if (big != small) accept(small, big);
  }
  return answers;
}

CubicCoefficients eliminated_cubic(const PureCubicProblem& p) {
  return {p.metrology.vertical, 0, 0, -p.volume};
}

CubicCoefficients eliminated_cubic(const DepressedCubicProblem& p) {
  return {p.c, 0, 1, -p.rhs};
}

CubicCoefficients eliminated_cubic(const No5Problem& p) {
  return {p.c3, p.c2, 0, -p.rhs};
}

CubicCoefficients eliminated_cubic(const WellProblem& p) {
  // vertical x^2 y = V with y = x -/+ side.
  const ExactNumber& v = p.metrology.vertical;
  if (p.constraint == SideConstraint::Difference) {
    return {v, -v * p.side, 0, -p.volume};
  }
  return {-v, v * p.side, 0, -p.volume};
}

CubicCoefficients eliminated_cubic(const WangProblem& p) {
  const ExactNumber a = p.difference / ExactNumber(2);
  const ExactNumber b = p.product * p.product / (ExactNumber(2) * p.difference);
  return {1, a, 0, -b};
}

}  // namespace babcubic
