#include "babcubic/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "babcubic/expression.hpp"
#include "babcubic/factorize.hpp"
#include "babcubic/procedure.hpp"
#include "babcubic/sexagesimal.hpp"
#include "babcubic/verify.hpp"

namespace babcubic {

namespace {

enum class Style { Plain, Tablet, Machine };

struct Options {
  std::string style = "plain";
  bool fractions = false;
  std::string bounds;
  std::string conversion;
  std::string input;
  std::string kind;

  Style parsed_style() const {
    if (style == "tablet") return Style::Tablet;
    if (style == "machine") return Style::Machine;
    return Style::Plain;
  }
};

SearchBounds parse_bounds(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("bounds must look like LO..HI");
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 18) {
      throw ParseError("invalid bound '" + s + "'");
    }
    return std::stoull(s);
  };
  SearchBounds b{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  b.validate();
  return b;
}

class Printer {
 public:
  Printer(std::ostream& out, Style style, bool fractions)
      : out_(out), style_(style), fractions_(fractions) {}

  std::string value(const ExactNumber& v) const {
    if (style_ == Style::Machine) return render_or_fraction(v) + "\t" + v.to_fraction_string();
    std::string s = render_or_fraction(v);
    if (fractions_ && !v.is_integer() && s != v.to_fraction_string()) {
      s += " (" + v.to_fraction_string() + ")";
    }
    return s;
  }

  void solution(std::string_view type, const Solution& s) const {
    switch (style_) {
      case Style::Machine: {
        out_ << "type\t" << type << "\n";
        for (std::size_t i = 0; i < s.trace.size(); ++i) {
          out_ << "step." << i + 1 << "\t" << value(s.trace[i].value) << "\n";
        }
        for (const auto& r : s.roots) out_ << "root." << r.name << "\t" << value(r.value) << "\n";
        for (const auto& v : s.values) out_ << "value." << v.name << "\t" << value(v.value) << "\n";
        for (const auto& n : s.notes) out_ << "note\t" << n << "\n";
        if (!s.conclusion.empty()) out_ << "conclusion\t" << s.conclusion << "\n";
        break;
      }
      case Style::Tablet: {
        for (const auto& t : s.trace) {
          out_ << t.description << ", and you see " << value(t.value) << ".\n";
        }
        if (!s.roots.empty()) {
          std::string list;
          for (const auto& r : s.roots) list += (list.empty() ? "" : " ") + value(r.value);
          out_ << list << " are the roots.\n";
        }
        for (const auto& n : s.notes) out_ << "(" << n << ")\n";
        out_ << s.conclusion << "\n";
        break;
      }
      case Style::Plain: {
        for (const auto& t : s.trace) {
          out_ << t.label << ": " << value(t.value) << " [" << t.description << "]\n";
        }
        if (!s.roots.empty()) {
          std::string list;
          for (const auto& r : s.roots) list += (list.empty() ? "" : ", ") + value(r.value);
          out_ << "roots: " << list << "\n";
        }
        for (const auto& v : s.values) out_ << v.name << " = " << value(v.value) << "\n";
        for (const auto& n : s.notes) out_ << "note: " << n << "\n";
        break;
      }
    }
  }

 private:
  std::ostream& out_;
  Style style_;
  bool fractions_;
};

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
  if (const auto* nrs = dynamic_cast<const NoRationalSolutionError*>(&e)) {
    for (const auto& r : nrs->repairs()) err << "hint: " << describe_repair(r) << "\n";
  }
}

Problem load_with_overrides(const Options& o) {
  Problem p = load_problem(o.input);
  ProblemOverrides overrides;
  if (!o.conversion.empty()) overrides.conversion = parse_literal(o.conversion);
  if (!o.bounds.empty()) overrides.bounds = parse_bounds(o.bounds);
  apply_overrides(p, overrides);
  return p;
}

int cmd_calc(const Options& o, std::ostream& out) {
  Printer print(out, o.parsed_style(), o.fractions);
  ExactNumber v = evaluate_expression(o.input);
  if (o.parsed_style() == Style::Machine) {
    out << "value\t" << print.value(v) << "\n";
  } else {
    out << print.value(v) << "\n";
  }
  return 0;
}

int cmd_tables(const Options& o, std::ostream& out) {
  TableKind kind;
  if (o.kind == "cube") {
    kind = TableKind::Cube;
  } else if (o.kind == "cube-plus-square") {
    kind = TableKind::CubePlusSquare;
  } else {
    throw ParseError("unknown table kind '" + o.kind + "' (cube | cube-plus-square)");
  }
  SearchBounds range = o.bounds.empty() ? SearchBounds{1, 60} : parse_bounds(o.bounds);
  for (const auto& e : build_table(kind, range)) {
    out << e.n << "\t" << e.value.str() << "\t" << render_number(ExactNumber(e.value)) << "\n";
  }
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Problem p = load_with_overrides(o);
  Solution s = solve(p);
  Printer(out, o.parsed_style(), o.fractions).solution(problem_type_name(p.type), s);
  return 0;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  Script script = load_script(o.input);
  Trace t = execute(script);
  Printer print(out, o.parsed_style(), o.fractions);
  switch (o.parsed_style()) {
    case Style::Machine:
      for (const auto& e : t.steps) out << "step." << e.label << "\t" << print.value(e.value) << "\n";
      for (const auto& [name, v] : t.registers) out << "register." << name << "\t" << print.value(v) << "\n";
      break;
    case Style::Tablet:
      out << render_trace(t, TraceStyle::Tablet);
      break;
    case Style::Plain:
      out << render_trace(t, TraceStyle::Plain);
      break;
  }
  for (const auto& w : t.warnings) err << "warning: " << w << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Problem p = load_with_overrides(o);
  VerificationReport r = verify(p);
  Printer print(out, o.parsed_style(), o.fractions);
  const bool machine = o.parsed_style() == Style::Machine;
  if (r.solution) {
    for (const auto& v : r.solution->values) {
      out << (machine ? "solver." + v.name + "\t" : "solver: " + v.name + " = ")
          << print.value(v.value) << "\n";
    }
  } else {
    out << (machine ? "solver.error\t" : "solver: ") << error_name(*r.failure)
        << (machine ? "\n" : ": " + r.failure_message + "\n");
  }
  if (r.oracle_roots.empty()) {
    out << (machine ? "oracle.roots\tnone\n" : "oracle: no positive rational roots\n");
  }
  for (const auto& root : r.oracle_roots) {
    out << (machine ? "oracle.root\t" : "oracle: root ") << print.value(root) << "\n";
  }
  for (const auto& f : r.findings) out << (machine ? "finding\t" : "finding: ") << f << "\n";
  out << (machine ? "agree\t" : "agreement: ") << (r.agrees ? "yes" : "no") << "\n";
  return r.agrees ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sexagesimal arithmetic and Babylonian cubic-equation solvers", "babcubic"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--style", o.style, "Output style")
        ->check(CLI::IsMember({"plain", "tablet", "machine"}));
    sub->add_flag("--fractions", o.fractions, "Print rational forms alongside sexagesimal");
  };

  auto* calc = app.add_subcommand("calc", "Evaluate a sexagesimal expression");
  calc->add_option("expression", o.input, "Expression, e.g. \"igi 12\"")->required();
  add_common(calc);

  auto* tables = app.add_subcommand("tables", "Emit an n^3 or n^3 + n^2 table");
  tables->add_option("kind", o.kind, "cube | cube-plus-square")->required();
  tables->add_option("--bounds", o.bounds, "Range LO..HI (default 1..60)");
  add_common(tables);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("problem", o.input, "Problem file")->required();
  solve_cmd->add_option("--bounds", o.bounds, "Search range LO..HI");
  solve_cmd->add_option("--conversion", o.conversion, "Vertical conversion constant");
  add_common(solve_cmd);

  auto* replay = app.add_subcommand("replay", "Execute a .proc script");
  replay->add_option("script", o.input, "Procedure script")->required();
  add_common(replay);

  auto* verify_cmd = app.add_subcommand("verify", "Solve a problem and cross-check with the oracle");
  verify_cmd->add_option("problem", o.input, "Problem file")->required();
  verify_cmd->add_option("--bounds", o.bounds, "Search range LO..HI");
  verify_cmd->add_option("--conversion", o.conversion, "Vertical conversion constant");
  add_common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (calc->parsed()) return cmd_calc(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (replay->parsed()) return cmd_replay(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    report_error(e, err);
    return is_usage_error(e.code()) ? 2 : 1;
  }
  return 2;
}

}  // namespace babcubic
