#include "babcubic/problem.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "babcubic/sexagesimal.hpp"

namespace babcubic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

const std::set<std::string, std::less<>> kKnownKeys{
    "type", "volume", "area_plus_volume", "length_diff_width", "length_plus_width",
    "c",    "c2",     "rhs",              "P",                 "S",
    "conversion"};

struct Entry {
  ExactNumber value;
  std::size_t line;
};

class KeyReader {
 public:
  KeyReader(std::map<std::string, Entry> entries, ProblemType type)
      : entries_(std::move(entries)), type_(type) {}

  ExactNumber take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ParseError("missing key '" + key + "' for type " +
                       std::string(problem_type_name(type_)));
    }
    ExactNumber v = it->second.value;
    entries_.erase(it);
    return v;
  }

  std::optional<ExactNumber> take_optional(const std::string& key) {
    if (!entries_.count(key)) return std::nullopt;
    return take(key);
  }

  void finish() const {
    if (entries_.empty()) return;
    const auto& [key, entry] = *entries_.begin();
    throw ParseError("key '" + key + "' does not apply to type " +
                         std::string(problem_type_name(type_)),
                     entry.line, 1);
  }

 private:
  std::map<std::string, Entry> entries_;
  ProblemType type_;
};

Metrology metrology_from(KeyReader& keys) {
  Metrology m;
  if (auto c = keys.take_optional("conversion")) m.vertical = *c;
  return m;
}

}  // namespace

std::string_view problem_type_name(ProblemType t) {
  switch (t) {
    case ProblemType::PureCubic: return "pure_cubic";
    case ProblemType::Depressed: return "depressed";
    case ProblemType::No5: return "no5";
    case ProblemType::WellDiff: return "well_diff";
    case ProblemType::WellSum: return "well_sum";
    case ProblemType::Wang: return "wang";
  }
  return "?";
}

Problem parse_problem(std::string_view text) {
  std::optional<ProblemType> type;
  std::map<std::string, Entry> entries;
  Problem problem;
  std::set<std::string> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no,
                       static_cast<std::size_t>(line.data() - raw.data()) + 1);
    }
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    // 1-based columns in the raw line.
    const std::size_t key_col = static_cast<std::size_t>(line.data() - raw.data()) + 1;
    const std::size_t value_col = value.empty()
                                      ? key_col + eq + 1
                                      : static_cast<std::size_t>(value.data() - raw.data()) + 1;
    if (key.empty()) throw ParseError("empty key", line_no, key_col);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no, value_col);
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line_no, key_col);

    if (key == "type") {
      for (auto t : {ProblemType::PureCubic, ProblemType::Depressed, ProblemType::No5,
                     ProblemType::WellDiff, ProblemType::WellSum, ProblemType::Wang}) {
        if (problem_type_name(t) == value) type = t;
      }
      if (!type) throw ParseError("unknown problem type '" + std::string(value) + "'", line_no, value_col);
      continue;
    }
    ExactNumber number;
    try {
      number = parse_literal(value);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, value_col);
    }
    constexpr std::string_view kClaim = "claimed_";
    if (key.rfind(kClaim, 0) == 0 && key.size() > kClaim.size()) {
      problem.claims.push_back({key.substr(kClaim.size()), number});
      continue;
    }
    if (!kKnownKeys.count(key)) throw ParseError("unknown key '" + key + "'", line_no, key_col);
    entries[key] = {number, line_no};
  }
  if (!type) throw ParseError("missing key 'type'");

  problem.type = *type;
  KeyReader keys(std::move(entries), *type);
  switch (*type) {
    case ProblemType::PureCubic: {
      PureCubicProblem p;
      p.volume = keys.take("volume");
      p.metrology = metrology_from(keys);
      problem.data = p;
      break;
    }
    case ProblemType::Depressed: {
      DepressedCubicProblem p;
      p.c = keys.take("c");
      p.rhs = keys.take("rhs");
      problem.data = p;
      break;
    }
    case ProblemType::No5: {
      No5Problem p;
      p.c3 = keys.take("c");
      p.c2 = keys.take("c2");
      p.rhs = keys.take("rhs");
      p.metrology = metrology_from(keys);
      problem.data = p;
      break;
    }
    case ProblemType::WellDiff:
    case ProblemType::WellSum: {
      WellProblem p;
      p.volume = keys.take("volume");
      p.area_plus_volume = keys.take("area_plus_volume");
      if (*type == ProblemType::WellDiff) {
        p.constraint = SideConstraint::Difference;
        p.side = keys.take("length_diff_width");
      } else {
        p.constraint = SideConstraint::Sum;
        p.side = keys.take("length_plus_width");
      }
      p.metrology = metrology_from(keys);
      problem.data = p;
      break;
    }
    case ProblemType::Wang: {
      WangProblem p;
      p.product = keys.take("P");
      p.difference = keys.take("S");
      problem.data = p;
      break;
    }
  }
  keys.finish();
  return problem;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

void apply_overrides(Problem& p, const ProblemOverrides& o) {
  std::visit(
      [&](auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, DepressedCubicProblem>) {
          if (o.bounds) data.bounds = *o.bounds;
        } else if constexpr (!std::is_same_v<T, WangProblem>) {
          if (o.conversion) data.metrology.vertical = *o.conversion;
        }
      },
      p.data);
}

Solution solve(const Problem& p) {
  Solution s = std::visit(
      [](const auto& data) -> Solution {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, PureCubicProblem>) {
          return solve_pure_cubic(data.volume, data.metrology);
        } else if constexpr (std::is_same_v<T, DepressedCubicProblem>) {
          return solve_depressed_cubic(data.c, data.rhs, data.bounds);
        } else if constexpr (std::is_same_v<T, No5Problem>) {
          return solve_no5_style(data.c3, data.c2, data.rhs, data.metrology);
        } else if constexpr (std::is_same_v<T, WellProblem>) {
          return solve_well(data);
        } else {
          return solve_wang_system(data);
        }
      },
      p.data);
  check_claims(s, p.claims);
  return s;
}

}  // namespace babcubic
