#include <doctest.h>

#include <fstream>
#include <sstream>

#include "babcubic/procedure.hpp"
#include "babcubic/sexagesimal.hpp"
#include "babcubic/tables.hpp"
#include "generators.hpp"

using namespace babcubic;
using babcubic::testing::code_of;
using babcubic::testing::q;
using babcubic::testing::random_nonzero_rational;
using babcubic::testing::random_positive_rational;
using babcubic::testing::uniform;

namespace {

const std::string kProcDir = std::string(BABCUBIC_DATA_DIR) + "/procedures/";

ExactNumber run_one(const std::string& line, const std::string& reg = "r") {
  return execute(parse_script(line)).registers.at(reg);
}

std::string lit(const ExactNumber& x) { return render_or_fraction(x); }

}  // namespace

TEST_CASE("parse a single statement") {
  Script s = parse_script("r1 = igi 12 => 0;5");
  REQUIRE(s.statements.size() == 1);
  const Statement& st = s.statements[0];
  CHECK(st.opcode == Opcode::Igi);
  CHECK(st.target == "r1");
  CHECK(st.label == "s1");
  CHECK_FALSE(st.explicit_label);
  REQUIRE(st.operands.size() == 1);
  CHECK_FALSE(st.operands[0].reg.has_value());
  CHECK(st.operands[0].literal == q(12));
  CHECK(st.expectation == q(1, 12));
}

TEST_CASE("parse blank text, comments and labels") {
  CHECK(parse_script("").statements.empty());
  CHECK(parse_script("# only a comment\n\n   \n").statements.empty());
  Script s = parse_script("[obv. 7] r = igi 12   # reciprocal\nc = mul r 1;30\n");
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0].label == "obv. 7");
  CHECK(s.statements[0].explicit_label);
  CHECK(s.statements[1].label == "s2");
  CHECK(s.statements[1].operands[0].reg == "r");
  CHECK(s.statements[1].line == 2);
  Script f = parse_script("w = put 35301/50\nv = mul w 2 => 1412 1/25\n");
  CHECK(f.statements[0].operands[0].literal == q(35301, 50));
  CHECK(f.statements[1].expectation == q(35301, 25));
}

TEST_CASE("parse errors carry line and column") {
  auto parse_error = [](const std::string& text) -> std::string {
    try {
      parse_script(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  CHECK(parse_error("r1 = frobnicate 3") == "1:6: unknown opcode 'frobnicate'");
  CHECK(parse_error("r = put 1\nr = mul 1") == "2:5: mul takes 2 operand(s), got 1");
  CHECK(parse_error("R = put 1").rfind("1:1: invalid register name", 0) == 0);
  CHECK(parse_error("r put 1").rfind("1:1:", 0) == 0);
  CHECK(parse_error("r = put 1;60").rfind("1:9:", 0) == 0);
  CHECK(parse_error("r = put 1 =>").rfind("1:11:", 0) == 0);
  CHECK(parse_error("r = put $").rfind("1:9: invalid operand", 0) == 0);
  CHECK(parse_error("[a] r = put 1\n[a] s = put 2").rfind("2:", 0) == 0);
  CHECK(parse_error("[a r = put 1").rfind("1:1: unterminated label", 0) == 0);
  CHECK(parse_error("[] r = put 1").rfind("1:1: empty label", 0) == 0);
}

TEST_CASE("execute the reciprocal script") {
  Trace t = execute(parse_script("r1 = igi 12 => 0;5\nc = mul r1 1;30 => 0;7,30\n"));
  REQUIRE(t.steps.size() == 2);
  CHECK(t.registers.at("c") == q(1, 8));
  CHECK(render_trace(t, TraceStyle::Plain) == "s1: r1 = 0;5\ns2: c = 0;7,30\n");
  CHECK(render_trace(t, TraceStyle::Tablet) ==
        "make the reciprocal of 12, and you see 0;5\n"
        "multiply 0;5 by 1;30, and you see 0;7,30\n");
  CHECK(render_trace(Trace{}, TraceStyle::Tablet).empty());
  CHECK(render_trace(Trace{}, TraceStyle::Plain).empty());
}

TEST_CASE("expectation mismatch aborts at the step") {
  try {
    execute(parse_script("a = put 1\n[igi] r = igi 12 => 0;6\nb = put 2\n"));
    FAIL("expected ExpectationMismatch");
  } catch (const ExpectationMismatchError& e) {
    CHECK(e.code() == ErrorCode::ExpectationMismatch);
    CHECK(e.label() == "igi");
    CHECK(e.expected() == q(1, 10));
    CHECK(e.actual() == q(1, 12));
    CHECK(std::string(e.what()) == "step igi: expected 0;6, got 0;5");
  }
}

TEST_CASE("runtime errors") {
  CHECK(code_of([] { execute(parse_script("r = mul a 2")); }) == ErrorCode::UndefinedRegister);
  CHECK(code_of([] { execute(parse_script("r = cuberoot 2")); }) == ErrorCode::NotPerfectCube);
  CHECK(code_of([] { execute(parse_script("r = igi 0")); }) == ErrorCode::ZeroInput);
  CHECK(code_of([] { execute(parse_script("r = basi2 4,13")); }) == ErrorCode::NotFound);
  CHECK(code_of([] { execute(parse_script("r = basi2 1;30")); }) == ErrorCode::NotInteger);
  CHECK(code_of([] { execute(parse_script("r = searchn3kn 3 10,0,37")); }) ==
        ErrorCode::NotFound);
  Trace t = execute(parse_script("r = igi 7"));
  CHECK(t.registers.at("r") == q(1, 7));
  REQUIRE(t.warnings.size() == 1);
}

TEST_CASE("tablet phrasing per opcode") {
  Trace t = execute(parse_script(
      "a = put 0;50\n"
      "b = add a 0;10\n"
      "c = sub b 0;20\n"
      "d = square a\n"
      "e = cuberoot 0;7,30\n"
      "f = basi2 4,12\n"
      "g = searchn3kn 3 10,0,36\n"
      "depth = show 6\n"));
  CHECK(render_trace(t, TraceStyle::Tablet) ==
        "put down 0;50\n"
        "add 0;50 and 0;10, and you see 1\n"
        "subtract 0;20 from 1, and you see 0;40\n"
        "square 0;50, and you see 0;41,40\n"
        "what is the cube root of 0;7,30? 0;30 is the cube root\n"
        "6 is the n^3 + n^2 root of 4,12\n"
        "search n^3 + 3n for 10,0,36, and you see 33\n"
        "6 is the depth\n");
}

TEST_CASE("bundled scripts replay cleanly and match the manifest") {
  std::ifstream manifest(kProcDir + "MANIFEST");
  REQUIRE(manifest);
  std::string line;
  std::size_t checked = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string script, reg, value;
    fields >> script >> reg >> value;
    CAPTURE(line);
    Trace t = execute(load_script(kProcDir + script));
    CHECK(t.registers.at(reg) == parse_literal(value));
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("bundled well script trace") {
  Trace t = execute(load_script(kProcDir + "bm85200_6.proc"));
  std::vector<std::string> values;
  for (const auto& s : t.steps) values.push_back(render_number(s.value));
  CHECK(values == std::vector<std::string>{"0;50", "10", "0;41,40", "6;56,40", "0;8,38,24",
                                           "0;10,4,48", "0;36", "0;24", "0;42", "0;30", "0;20",
                                           "6"});
  Trace im = execute(load_script(kProcDir + "im54478.proc"));
  CHECK(im.steps.size() == 6);
  CHECK(im.registers.at("x") == q(1, 2));
  CHECK(im.registers.at("depth") == q(6));
}

TEST_CASE("property: to_text and parse_script roundtrip") {
  const char* regs[] = {"a", "b", "c1", "x_y"};
  for (int i = 0; i < 300; ++i) {
    Script s;
    auto count = uniform(0, 8);
    for (std::int64_t k = 0; k < count; ++k) {
      Statement st;
      st.opcode = static_cast<Opcode>(uniform(0, 9));
      st.target = regs[uniform(0, 3)];
      for (std::size_t j = 0; j < opcode_arity(st.opcode); ++j) {
        if (uniform(0, 1)) {
          st.operands.push_back({std::string(regs[uniform(0, 3)]), {}});
        } else {
          ExactNumber v = uniform(0, 1) ? random_nonzero_rational(1000)
                                        : babcubic::testing::random_regular_denominator();
          st.operands.push_back({std::nullopt, v});
        }
      }
      if (uniform(0, 1)) st.expectation = random_nonzero_rational(500);
      st.explicit_label = uniform(0, 1) == 1;
      st.label = st.explicit_label ? "L " + std::to_string(k) : "s" + std::to_string(k + 1);
      s.statements.push_back(std::move(st));
    }
    Script back = parse_script(to_text(s));
    REQUIRE(back.statements == s.statements);
    REQUIRE(to_text(back) == to_text(s));
  }
}

TEST_CASE("property: opcodes agree with the core operations") {
  for (int i = 0; i < 300; ++i) {
    ExactNumber a = random_nonzero_rational(100000);
    ExactNumber b = random_nonzero_rational(100000);
    std::string args = lit(a) + " " + lit(b);
    REQUIRE(run_one("r = put " + lit(a)) == a);
    REQUIRE(run_one("r = show " + lit(a)) == a);
    REQUIRE(run_one("r = igi " + lit(a)) == reciprocal(a));
    REQUIRE(run_one("r = mul " + args) == arithmetic(a, b, ArithmeticOp::Mul));
    REQUIRE(run_one("r = add " + args) == arithmetic(a, b, ArithmeticOp::Add));
    REQUIRE(run_one("r = sub " + args) == arithmetic(a, b, ArithmeticOp::Sub));
    REQUIRE(run_one("r = square " + lit(a)) == a * a);

    ExactNumber p = random_positive_rational(1000);
    REQUIRE(run_one("r = cuberoot " + lit(p.pow(3))) == cube_root_exact(p.pow(3)));

    auto n = uniform(1, 200);
    Integer v = table_polynomial(TableKind::CubePlusSquare, Integer(n));
    REQUIRE(run_one("r = basi2 " + v.str() + "/1") ==
            ExactNumber(Integer(inverse_lookup(TableKind::CubePlusSquare, v))));

    auto k = uniform(0, 100);
    Integer t = Integer(n) * n * n + Integer(k) * n;
    REQUIRE(run_one("r = searchn3kn " + std::to_string(k) + "/1 " + t.str() + "/1") ==
            ExactNumber(Integer(search_n3_plus_kn(static_cast<std::uint64_t>(k), t))));
  }
}

TEST_CASE("property: execution is deterministic") {
  for (const char* name : {"im54478.proc", "ybc4669_b2.proc", "bm85200_5.proc",
                           "bm85200_6.proc", "bm85200_7.proc"}) {
    Script s = load_script(kProcDir + name);
    Trace a = execute(s);
    Trace b = execute(s);
    CHECK(render_trace(a, TraceStyle::Plain) == render_trace(b, TraceStyle::Plain));
    CHECK(render_trace(a, TraceStyle::Tablet) == render_trace(b, TraceStyle::Tablet));
    CHECK(a.registers == b.registers);
  }
}
