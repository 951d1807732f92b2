#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "babcubic/error.hpp"
#include "babcubic/exact_number.hpp"

// Straight-line procedure scripts. One statement per line:
//
//   [label] register = opcode operand* [=> expected]
//
// Operands are registers ([a-z][a-z0-9_]*) or number literals; '#' starts a
// comment. The bracketed label is optional and defaults to "s<index>".

namespace babcubic {

enum class Opcode { Put, Igi, Mul, Add, Sub, Square, Cuberoot, Basi2, SearchN3kn, Show };

std::string_view opcode_name(Opcode op);
std::optional<Opcode> opcode_from_name(std::string_view name);
std::size_t opcode_arity(Opcode op);

struct Operand {
  std::optional<std::string> reg;  // set for register operands
  ExactNumber literal;             // used when reg is empty

  friend bool operator==(const Operand&, const Operand&) = default;
};

struct Statement {
  std::string label;
  std::string target;
  Opcode opcode = Opcode::Put;
  std::vector<Operand> operands;
  std::optional<ExactNumber> expectation;
  bool explicit_label = false;
  std::size_t line = 0;

  // Structural identity; source line numbers are ignored.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.label == b.label && a.target == b.target && a.opcode == b.opcode &&
           a.operands == b.operands && a.expectation == b.expectation &&
           a.explicit_label == b.explicit_label;
  }
};

struct Script {
  std::string name;
  std::vector<Statement> statements;
};

struct TraceEntry {
  std::string label;
  std::string target;
  Opcode opcode;
  std::vector<ExactNumber> operands;
  ExactNumber value;
  std::optional<ExactNumber> expected;
};

struct Trace {
  std::vector<TraceEntry> steps;
  std::map<std::string, ExactNumber> registers;
  std::vector<std::string> warnings;
};

class ExpectationMismatchError : public Error {
 public:
  ExpectationMismatchError(std::string label, ExactNumber expected, ExactNumber actual);

  const std::string& label() const noexcept { return label_; }
  const ExactNumber& expected() const noexcept { return expected_; }
  const ExactNumber& actual() const noexcept { return actual_; }

 private:
  std::string label_;
  ExactNumber expected_;
  ExactNumber actual_;
};

Script parse_script(std::string_view text, std::string name = {});
Script load_script(const std::string& path);

// Canonical text; parse_script(to_text(s)) is structurally identical to s.
std::string to_text(const Script& s);

// Evaluates statements in order. Aborts on the first expectation mismatch.
Trace execute(const Script& s);

enum class TraceStyle { Plain, Tablet };
std::string render_trace(const Trace& t, TraceStyle style);
std::string render_step(const TraceEntry& e, TraceStyle style);

}  // namespace babcubic
