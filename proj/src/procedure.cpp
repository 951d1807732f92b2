#include "babcubic/procedure.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "babcubic/sexagesimal.hpp"
#include "babcubic/tables.hpp"

namespace babcubic {

namespace {

struct OpcodeInfo {
  Opcode op;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<OpcodeInfo, 10> kOpcodes{{
    {Opcode::Put, "put", 1},
    {Opcode::Igi, "igi", 1},
    {Opcode::Mul, "mul", 2},
    {Opcode::Add, "add", 2},
    {Opcode::Sub, "sub", 2},
    {Opcode::Square, "square", 1},
    {Opcode::Cuberoot, "cuberoot", 1},
    {Opcode::Basi2, "basi2", 1},
    {Opcode::SearchN3kn, "searchn3kn", 2},
    {Opcode::Show, "show", 1},
}};

bool is_register_name(std::string_view s) {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_words(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

ExactNumber parse_literal_at(const Token& t, std::size_t line) {
  try {
    return parse_literal(t.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, t.column);
  }
}

std::string show(const ExactNumber& x) { return render_or_fraction(x); }

std::uint64_t as_count(const ExactNumber& v, std::string_view what, bool allow_zero = false) {
  if (!v.is_integer() || v.sign() < (allow_zero ? 0 : 1)) {
    throw Error(ErrorCode::NotInteger,
                std::string(what) + " must be a " + (allow_zero ? "non-negative" : "positive") +
                    " integer, got " + show(v));
  }
  return static_cast<std::uint64_t>(v.numerator());
}

std::string literal_text(const ExactNumber& v) { return render_or_fraction(v); }

}  // namespace

std::string_view opcode_name(Opcode op) {
  for (const auto& info : kOpcodes) {
    if (info.op == op) return info.name;
  }
  return "?";
}

std::optional<Opcode> opcode_from_name(std::string_view name) {
  for (const auto& info : kOpcodes) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

std::size_t opcode_arity(Opcode op) {
  for (const auto& info : kOpcodes) {
    if (info.op == op) return info.arity;
  }
  return 0;
}

ExpectationMismatchError::ExpectationMismatchError(std::string label, ExactNumber expected,
                                                   ExactNumber actual)
    : Error(ErrorCode::ExpectationMismatch,
            "step " + label + ": expected " + render_or_fraction(expected) + ", got " +
                render_or_fraction(actual)),
      label_(std::move(label)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

Script parse_script(std::string_view text, std::string name) {
  Script script;
  script.name = std::move(name);
  std::set<std::string> labels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t offset = 0;
    while (offset < line.size() && std::isspace(static_cast<unsigned char>(line[offset]))) {
      ++offset;
    }
    if (offset == line.size()) continue;

    Statement st;
    st.line = line_no;
    if (line[offset] == '[') {
      std::size_t close = line.find(']', offset);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated label", line_no, offset + 1);
      }
      std::string_view label = line.substr(offset + 1, close - offset - 1);
      while (!label.empty() && label.front() == ' ') label.remove_prefix(1);
      while (!label.empty() && label.back() == ' ') label.remove_suffix(1);
      if (label.empty()) throw ParseError("empty label", line_no, offset + 1);
      st.label = std::string(label);
      st.explicit_label = true;
      offset = close + 1;
    }

    std::vector<Token> words = split_words(line.substr(offset), offset);
    if (words.size() < 3 || words[1].text != "=") {
      throw ParseError("expected 'register = opcode operand*'", line_no,
                       words.empty() ? offset + 1 : words.front().column);
    }
    if (!is_register_name(words[0].text)) {
      throw ParseError("invalid register name '" + words[0].text + "'", line_no,
                       words[0].column);
    }
    st.target = words[0].text;
    auto op = opcode_from_name(words[2].text);
    if (!op) {
      throw ParseError("unknown opcode '" + words[2].text + "'", line_no, words[2].column);
    }
    st.opcode = *op;

    std::size_t i = 3;
    for (; i < words.size() && words[i].text != "=>"; ++i) {
      const Token& w = words[i];
      if (is_register_name(w.text)) {
        st.operands.push_back({w.text, {}});
      } else if (looks_like_literal(w.text)) {
        st.operands.push_back({std::nullopt, parse_literal_at(w, line_no)});
      } else {
        throw ParseError("invalid operand '" + w.text + "'", line_no, w.column);
      }
    }
    if (i < words.size()) {
      // words[i] is "=>"; the rest of the line is one literal.
      if (i + 1 >= words.size()) {
        throw ParseError("missing expected value after '=>'", line_no, words[i].column);
      }
      std::string rest;
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (j > i + 1) rest += ' ';
        rest += words[j].text;
      }
      st.expectation = parse_literal_at({rest, words[i + 1].column}, line_no);
    }
    if (st.operands.size() != opcode_arity(st.opcode)) {
      throw ParseError(std::string(opcode_name(st.opcode)) + " takes " +
                           std::to_string(opcode_arity(st.opcode)) + " operand(s), got " +
                           std::to_string(st.operands.size()),
                       line_no, words[2].column);
    }
    if (!st.explicit_label) st.label = "s" + std::to_string(script.statements.size() + 1);
    if (!labels.insert(st.label).second) {
      throw ParseError("duplicate label '" + st.label + "'", line_no, offset + 1);
    }
    script.statements.push_back(std::move(st));
  }
  return script;
}

Script load_script(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open script '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  return parse_script(buf.str(), name);
}

std::string to_text(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (st.explicit_label) out += "[" + st.label + "] ";
    out += st.target + " = " + std::string(opcode_name(st.opcode));
    for (const auto& o : st.operands) out += " " + (o.reg ? *o.reg : literal_text(o.literal));
    if (st.expectation) out += " => " + literal_text(*st.expectation);
    out += '\n';
  }
  return out;
}

Trace execute(const Script& s) {
  Trace trace;
  for (const auto& st : s.statements) {
    std::vector<ExactNumber> args;
    for (const auto& o : st.operands) {
      if (!o.reg) {
        args.push_back(o.literal);
        continue;
      }
      auto it = trace.registers.find(*o.reg);
      if (it == trace.registers.end()) {
        throw Error(ErrorCode::UndefinedRegister,
                    "step " + st.label + ": register '" + *o.reg + "' is not defined");
      }
      args.push_back(it->second);
    }

    ExactNumber value;
    switch (st.opcode) {
      case Opcode::Put:
      case Opcode::Show:
        value = args[0];
        break;
      case Opcode::Igi:
        value = reciprocal(args[0]);
        if (!is_regular(args[0])) {
          trace.warnings.push_back("step " + st.label + ": igi of non-regular number " +
                                   show(args[0]));
        }
        break;
      case Opcode::Mul:
        value = args[0] * args[1];
        break;
      case Opcode::Add:
        value = args[0] + args[1];
        break;
      case Opcode::Sub:
        value = args[0] - args[1];
        break;
      case Opcode::Square:
        value = args[0] * args[0];
        break;
      case Opcode::Cuberoot:
        value = cube_root_exact(args[0]);
        break;
      case Opcode::Basi2:
        value = ExactNumber(Integer{inverse_lookup(TableKind::CubePlusSquare,
                                                   Integer{as_count(args[0], "basi2 operand")})});
        break;
      case Opcode::SearchN3kn:
        value = ExactNumber(Integer{search_n3_plus_kn(as_count(args[0], "searchn3kn k", true),
                                                      Integer{as_count(args[1], "searchn3kn target")})});
        break;
    }
    if (st.expectation && *st.expectation != value) {
      throw ExpectationMismatchError(st.label, *st.expectation, value);
    }
    trace.registers[st.target] = value;
    trace.steps.push_back({st.label, st.target, st.opcode, std::move(args), value, st.expectation});
  }
  return trace;
}

std::string render_step(const TraceEntry& e, TraceStyle style) {
  const std::string v = show(e.value);
  if (style == TraceStyle::Plain) return e.label + ": " + e.target + " = " + v;
  auto arg = [&](std::size_t i) { return show(e.operands.at(i)); };
  switch (e.opcode) {
    case Opcode::Put: return "put down " + v;
    case Opcode::Igi: return "make the reciprocal of " + arg(0) + ", and you see " + v;
    case Opcode::Mul: return "multiply " + arg(0) + " by " + arg(1) + ", and you see " + v;
    case Opcode::Add: return "add " + arg(0) + " and " + arg(1) + ", and you see " + v;
    case Opcode::Sub: return "subtract " + arg(1) + " from " + arg(0) + ", and you see " + v;
    case Opcode::Square: return "square " + arg(0) + ", and you see " + v;
    case Opcode::Cuberoot:
      return "what is the cube root of " + arg(0) + "? " + v + " is the cube root";
    case Opcode::Basi2: return v + " is the n^3 + n^2 root of " + arg(0);
    case Opcode::SearchN3kn:
      return "search n^3 + " + arg(0) + "n for " + arg(1) + ", and you see " + v;
    case Opcode::Show: return v + " is the " + e.target;
  }
  return v;
}

std::string render_trace(const Trace& t, TraceStyle style) {
  std::string out;
  for (const auto& e : t.steps) out += render_step(e, style) + "\n";
  return out;
}

}  // namespace babcubic
