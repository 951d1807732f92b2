#include <doctest.h>

#include "babcubic/factorize.hpp"
#include "babcubic/oracle.hpp"
#include "babcubic/sexagesimal.hpp"
#include "babcubic/solvers.hpp"
#include "generators.hpp"

using namespace babcubic;
using babcubic::testing::code_of;
using babcubic::testing::q;
using babcubic::testing::uniform;

namespace {

ExactNumber sx(std::string_view s) { return parse_number(s); }

std::vector<ExactNumber> sx_list(std::initializer_list<std::string_view> items) {
  std::vector<ExactNumber> out;
  for (auto s : items) out.push_back(sx(s));
  return out;
}

WellProblem well(ExactNumber v, ExactNumber w, SideConstraint c, ExactNumber side) {
  WellProblem p;
  p.volume = std::move(v);
  p.area_plus_volume = std::move(w);
  p.constraint = c;
  p.side = std::move(side);
  return p;
}

void check_well_equations(const WellProblem& p, const Solution& s) {
  const auto& x = s.value("x");
  const auto& y = s.value("y");
  const auto& z = s.value("z");
  CHECK(z == p.metrology.vertical * x);
  CHECK(x * y * z == p.volume);
  CHECK(x * y + x * y * z == p.area_plus_volume);
  if (p.constraint == SideConstraint::Difference) {
    CHECK(x - y == p.side);
  } else {
    CHECK(x + y == p.side);
  }
}

}  // namespace

TEST_CASE("pure cubic, tablet instance") {
  Solution s = solve_pure_cubic(sx("1;30"));
  CHECK(s.trace_values() == sx_list({"0;5", "0;7,30", "0;30"}));
  CHECK(s.value("x") == q(1, 2));
  CHECK(s.value("z") == q(6));
  CHECK(s.conclusion == "0;30 is the side of your square. 6 is your depth.");
  CHECK(s.trace[0].description == "make the reciprocal of 12");
}

TEST_CASE("pure cubic, other volumes") {
  CHECK(solve_pure_cubic(q(12)).value("x") == q(1));
  CHECK(solve_pure_cubic(q(12)).value("z") == q(12));
  Solution s = solve_pure_cubic(q(96));
  CHECK(s.value("x") == q(2));
  CHECK(s.value("z") == q(24));
  CHECK(q(12) * s.value("x").pow(3) == q(96));
  CHECK(code_of([] { solve_pure_cubic(q(1)); }) == ErrorCode::NotPerfectCube);
  CHECK(code_of([] { solve_pure_cubic(q(0)); }) == ErrorCode::MalformedQuery);
  Metrology m;
  m.vertical = 6;
  CHECK(solve_pure_cubic(q(6, 8), m).value("x") == q(1, 2));
  CHECK(solve_pure_cubic(q(6, 8), m).value("z") == q(3));
}

TEST_CASE("depressed cubic, tablet instance") {
  Solution s = solve_depressed_cubic(q(12), sx("33,22"));
  CHECK(s.trace_values() == std::vector<ExactNumber>{q(18), sx("10,0,36"), q(33)});
  CHECK(s.value("x") == sx("5;30"));
  CHECK(s.value("m") == q(6));
  CHECK(s.value("k") == q(3));
  CHECK(q(12) * s.value("x").pow(3) + s.value("x") == q(2002));
}

TEST_CASE("depressed cubic without a rational solution proposes the repair") {
  try {
    solve_depressed_cubic(q(12), sx("33,20"));
    FAIL("expected NoRationalSolution");
  } catch (const NoRationalSolutionError& e) {
    CHECK(e.code() == ErrorCode::NoRationalSolution);
    REQUIRE(e.repairs().size() == 1);
    CHECK(e.repairs()[0].delta == 2);
    CHECK(e.repairs()[0].rhs == q(2002));
    CHECK(e.repairs()[0].x == q(11, 2));
    CHECK(describe_repair(e.repairs()[0]) == "+2 → 33,22 solves with x = 5;30");
  }
  CHECK(rational_roots_cubic(eliminated_cubic(DepressedCubicProblem{q(12), q(2000), {}})).empty());
}

TEST_CASE("depressed cubic, other inputs") {
  CHECK(solve_depressed_cubic(q(12), q(13)).value("x") == q(1));
  CHECK(depressed_scaling(q(12)) == 6);
  CHECK(depressed_scaling(q(1)) == 1);
  CHECK(depressed_scaling(q(4)) == 2);
  CHECK(depressed_scaling(q(1, 7)) == 1);
  // 7 | m is needed, but m may not exceed ceil(60 * 7/100) = 5.
  CHECK_FALSE(depressed_scaling(q(7, 100)).has_value());
  CHECK(code_of([] { solve_depressed_cubic(q(7, 100), q(1)); }) == ErrorCode::NoScaling);
  // Bounds that exclude the root turn the search into a failure.
  CHECK(code_of([] { solve_depressed_cubic(q(12), q(2002), {1, 30}); }) ==
        ErrorCode::NoRationalSolution);
}

TEST_CASE("property: depressed cubic recovers planted roots") {
  for (int i = 0; i < 200; ++i) {
    ExactNumber x = q(uniform(1, 600), 6);
    ExactNumber rhs = q(12) * x.pow(3) + x;
    Solution s = solve_depressed_cubic(q(12), rhs);
    REQUIRE(s.value("x") == x);
  }
}

TEST_CASE("no. 5 style cubic") {
  Solution s = solve_no5_style(q(8), sx("0;40"), sx("1;10"));
  CHECK(s.trace_values() == std::vector<ExactNumber>{q(216), q(252), q(6)});
  CHECK(s.value("z") == q(6));
  CHECK(s.value("x") == sx("0;30"));
  CHECK(solve_no5_style(q(8), q(2, 3), q(2, 216)).value("x") == q(1, 12));
  CHECK(solve_no5_style(q(8), q(2, 3), q(2, 216)).value("z") == q(1));
  CHECK(code_of([] { solve_no5_style(q(8), q(2, 3), q(2250, 216)); }) == ErrorCode::NotFound);
  CHECK(code_of([] { solve_no5_style(q(9), q(2, 3), q(7, 6)); }) == ErrorCode::StructureMismatch);
  CHECK(code_of([] { solve_no5_style(q(8), q(2, 3), q(1, 1000)); }) ==
        ErrorCode::NonIntegerTarget);
}

TEST_CASE("property: no. 5 solver agrees with the n^3 + n^2 table") {
  for (std::uint64_t z = 1; z <= 60; ++z) {
    ExactNumber target(table_polynomial(TableKind::CubePlusSquare, Integer(z)));
    Solution s = solve_no5_style(q(8), q(2, 3), target / q(216));
    REQUIRE(s.value("z") == ExactNumber(Integer(inverse_lookup(TableKind::CubePlusSquare,
                                                                target.numerator()))));
  }
}

TEST_CASE("well with a known difference, tablet instance") {
  WellProblem p = well(q(1), sx("1;10"), SideConstraint::Difference, sx("0;10"));
  Solution s = solve_well_difference(p);
  CHECK(s.trace_values() == sx_list({"0;10", "2", "0;1,40", "0;3,20", "18", "21"}));
  CHECK(s.root_values() == sx_list({"3", "2", "3;30"}));
  CHECK(s.value("x") == sx("0;30"));
  CHECK(s.value("y") == sx("0;20"));
  CHECK(s.value("z") == q(6));
  CHECK(s.notes.size() == 1);
  check_well_equations(p, s);
  std::set<std::string> labels;
  for (const auto& t : s.trace) CHECK(labels.insert(t.label).second);
}

TEST_CASE("well with a known sum, tablet instance") {
  WellProblem p = well(q(1), sx("1;10"), SideConstraint::Sum, sx("0;50"));
  Solution s = solve_well_sum(p);
  CHECK(s.trace_values() ==
        sx_list({"0;50", "10", "0;41,40", "6;56,40", "0;8,38,24", "0;10,4,48"}));
  CHECK(s.root_values() == sx_list({"0;36", "0;24", "0;42"}));
  CHECK(s.value("x") == sx("0;30"));
  CHECK(s.value("y") == sx("0;20"));
  CHECK(s.value("z") == q(6));
  check_well_equations(p, s);
}

TEST_CASE("constructed wells") {
  WellProblem d = well(q(48), q(50), SideConstraint::Difference, q(1));
  Solution sd = solve_well(d);
  CHECK(sd.value("x") == q(2));
  CHECK(sd.value("y") == q(1));
  CHECK(sd.value("z") == q(24));
  check_well_equations(d, sd);

  WellProblem s = well(q(48), q(50), SideConstraint::Sum, q(3));
  Solution ss = solve_well(s);
  CHECK(ss.value("x") == q(2));
  CHECK(ss.value("y") == q(1));
  CHECK(ss.value("z") == q(24));
  check_well_equations(s, ss);
}

TEST_CASE("wells without a rational answer") {
  CHECK(code_of([] {
          solve_well(well(q(1), q(7, 6), SideConstraint::Difference, q(1, 5)));
        }) == ErrorCode::NotFound);
  CHECK(code_of([] { solve_well(well(q(1), q(7, 6), SideConstraint::Sum, q(1))); }) ==
        ErrorCode::NotFound);
  CHECK(rational_roots_cubic(
            eliminated_cubic(well(q(1), q(7, 6), SideConstraint::Difference, q(1, 5))))
            .empty());
  CHECK(rational_roots_cubic(eliminated_cubic(well(q(1), q(7, 6), SideConstraint::Sum, q(1))))
            .empty());
}

TEST_CASE("property: well solvers satisfy the scaled pair equations") {
  for (int i = 0; i < 150; ++i) {
    // Plant x = d X, y = d (X - 1) for the difference form and check
    // X - Y = 1 and X^2 Y = V / (12 d^3).
    std::int64_t big = uniform(2, 40);
    ExactNumber dd = q(1, uniform(1, 12));
    ExactNumber x = dd * q(big);
    ExactNumber y = dd * q(big - 1);
    ExactNumber z = q(12) * x;
    WellProblem p = well(x * y * z, x * y + x * y * z, SideConstraint::Difference, dd);
    Solution s = solve_well(p);
    check_well_equations(p, s);
    ExactNumber bx = s.value("x") / dd;
    ExactNumber by = s.value("y") / dd;
    REQUIRE(bx - by == q(1));
    REQUIRE(bx * bx * by == p.volume / (q(12) * dd.pow(3)));
  }
}

TEST_CASE("x^3 + a x^2 = b by scaling") {
  X3Ax2Result r = solve_x3_ax2(q(369, 20), q(3377129, 500));
  CHECK(r.q == 9);
  CHECK(r.scale == q(41, 20));
  CHECK(r.reduced_target == 784);
  CHECK(r.n == 7);
  CHECK(r.x == q(287, 20));

  X3Ax2Result t = solve_x3_ax2(q(9), q(784));
  CHECK(t.q == 9);
  CHECK(t.scale == q(1));
  CHECK(t.x == q(7));

  X3Ax2Result u = solve_x3_ax2(q(3), q(4));
  CHECK(u.q == 3);
  CHECK(u.n == 1);
  CHECK(u.x == q(1));

  CHECK(code_of([] { solve_x3_ax2(q(1), q(1, 11), 10); }) == ErrorCode::NoScaleFound);
  // 2^2 (2 + 1) = 12 but b = 13 has no factorization at any q.
  CHECK(code_of([] { solve_x3_ax2(q(1), q(13), 10); }) == ErrorCode::NotFound);
  CHECK(code_of([] { solve_x3_ax2(q(0), q(13), 10); }) == ErrorCode::MalformedQuery);
}

TEST_CASE("Wang system") {
  Solution s = solve_wang_system({parse_literal("706 1/50"), parse_literal("36 9/10")});
  CHECK(s.value("x") == q(287, 20));
  CHECK(s.value("y") == q(246, 5));
  CHECK(s.value("z") == q(205, 4));
  CHECK(s.value("q") == q(9));
  CHECK(s.value("c") == q(41, 20));
  CHECK(s.value("n") == q(7));
  const auto& x = s.value("x");
  const auto& y = s.value("y");
  const auto& z = s.value("z");
  CHECK(x * x + y * y == z * z);
  CHECK(x * y == parse_literal("706 1/50"));
  CHECK(z - x == parse_literal("36 9/10"));

  CHECK(check_claims(s, {{"z", parse_literal("50 1/4")}, {"x", q(287, 20)}}) == 1);
  REQUIRE(s.notes.size() == 1);
  CHECK(s.notes[0] == "claimed z = 50;15 (201/4) is inconsistent; derived z = 51;15 (205/4)");
}

TEST_CASE("Wang system with non-Pythagorean data has no rational root") {
  // a = 1/2, b = 18: x^3 + x^2/2 = 18 has no rational root, so no scale q
  // yields a factorization.
  CHECK(code_of([] { solve_wang_system({q(6), q(1)}); }) == ErrorCode::NotFound);
  CHECK(rational_roots_cubic(eliminated_cubic(WangProblem{q(6), q(1)})).empty());
}

TEST_CASE("property: Wang solver recovers planted Pythagorean triples") {
  const std::int64_t triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25},
                                     {20, 21, 29}, {9, 40, 41}, {12, 35, 37}};
  for (const auto& t : triples) {
    for (std::int64_t scale_den : {1, 2, 5, 20}) {
      ExactNumber x = q(t[0], scale_den);
      ExactNumber y = q(t[1], scale_den);
      ExactNumber z = q(t[2], scale_den);
      Solution s = solve_wang_system({x * y, z - x});
      CHECK(s.value("x") == x);
      CHECK(s.value("y") == y);
      CHECK(s.value("z") == z);
    }
  }
}

TEST_CASE("solutions expose values by name") {
  Solution s = solve_pure_cubic(q(12));
  CHECK(s.find("x").has_value());
  CHECK_FALSE(s.find("w").has_value());
  CHECK(code_of([&] { s.value("w"); }) == ErrorCode::NotFound);
}

TEST_CASE("metrology validation") {
  Metrology m;
  m.vertical = 0;
  CHECK(code_of([&] { m.validate(); }) == ErrorCode::MalformedQuery);
}
