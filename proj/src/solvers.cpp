#include "babcubic/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "babcubic/factorize.hpp"
#include "babcubic/sexagesimal.hpp"

namespace babcubic {

namespace {

std::string show(const ExactNumber& x) { return render_or_fraction(x); }

void require_positive(const ExactNumber& v, std::string_view what) {
  if (v.sign() <= 0) {
    throw Error(ErrorCode::MalformedQuery, std::string(what) + " must be positive");
  }
}

void add_step(Solution& s, std::string label, const ExactNumber& value,
              std::string description) {
  s.trace.push_back({std::move(label), value, std::move(description)});
}

ExactNumber igi(Solution& s, std::string label, const ExactNumber& of) {
  ExactNumber r = reciprocal(of);
  add_step(s, std::move(label), r, "make the reciprocal of " + show(of));
  if (!is_regular(of)) {
    s.notes.push_back("reciprocal of the non-regular number " + show(of) +
                      " has no finite sexagesimal expansion");
  }
  return r;
}

// Positive integer or nullopt.
std::optional<Integer> as_positive_integer(const ExactNumber& v) {
  if (!v.is_integer() || v.sign() <= 0) return std::nullopt;
  return v.numerator();
}

SearchBounds bounds_up_to_cbrt(const Integer& target) {
  Integer top = integer_cbrt(target) + 1;
  return {1, static_cast<std::uint64_t>(top)};
}

/// Shared prologue of BM 85200 nos. 6 and 7: scale the side by both
/// conversion constants, form 1 / (a^2 b), multiply by the volume (when it
/// is not 1) and by the area-plus-volume.
struct WellPrologue {
  ExactNumber a;         // side * horizontal
  ExactNumber b;         // side * vertical
  ExactNumber reduced;   // volume / (a^2 b)
  ExactNumber combined;  // area_plus_volume / (a^2 b)
};

WellPrologue well_prologue(Solution& s, const WellProblem& p, int first_line,
                           std::string_view side_name) {
  require_positive(p.volume, "volume");
  require_positive(p.area_plus_volume, "area plus volume");
  require_positive(p.side, side_name);
  p.metrology.validate();
  const auto& m = p.metrology;
  const std::string l1 = std::to_string(first_line);
  const std::string l2 = std::to_string(first_line + 1);
  const std::string l3 = std::to_string(first_line + 2);

  WellPrologue w;
  w.a = p.side * m.horizontal;
  add_step(s, l1 + ".1", w.a,
           "multiply " + show(p.side) + ", the " + std::string(side_name) + ", by " +
               show(m.horizontal));
  w.b = p.side * m.vertical;
  add_step(s, l1 + ".2", w.b,
           "multiply " + show(p.side) + ", the " + std::string(side_name) + ", by " +
               show(m.vertical));
  ExactNumber sq = w.a * w.a;
  add_step(s, l2 + ".1", sq, "square " + show(w.a));
  ExactNumber cube = sq * w.b;
  add_step(s, l2 + ".2", cube, "multiply " + show(sq) + " by " + show(w.b));
  ExactNumber r = igi(s, l2 + ".3", cube);
  w.reduced = r * p.volume;
  if (p.volume != ExactNumber(1)) {
    add_step(s, l2 + ".4", w.reduced,
             "multiply " + show(r) + " by the volume " + show(p.volume));
  }
  w.combined = r * p.area_plus_volume;
  add_step(s, l3 + ".1", w.combined,
           "multiply " + show(r) + " by " + show(p.area_plus_volume));
  return w;
}

void finish_well(Solution& s, const WellProblem& p, const WellPrologue& w,
                 const ExactNumber& big, const ExactNumber& small) {
  // XY (z + 1) / b == combined gives the third root.
  ExactNumber third = w.combined / (big * small);
  s.roots = {{"X", big}, {"Y", small}, {"T", third}};

  ExactNumber x = w.a * big;
  ExactNumber y = w.a * small;
  ExactNumber z = w.b * big;
  ExactNumber z_from_third = third * w.b - ExactNumber(1);
  if (z_from_third != z) {
    throw Error(ErrorCode::InconsistentData,
                "depth from the third root is " + show(z_from_third) +
                    " but the conversion gives " + show(z));
  }
  if (x * y * z != p.volume || x * y + x * y * z != p.area_plus_volume) {
    throw Error(ErrorCode::InconsistentData,
                "recovered dimensions do not reproduce the volume and area");
  }
  s.values = {{"x", x}, {"y", y}, {"z", z}};
  s.conclusion = show(x) + " is the length. " + show(y) + " is the width. " +
                 show(z) + " is the depth.";
}

}  // namespace

void Metrology::validate() const {
  if (horizontal.sign() <= 0 || vertical.sign() <= 0) {
    throw Error(ErrorCode::MalformedQuery, "conversion constants must be positive");
  }
}

const ExactNumber& Solution::value(std::string_view name) const {
  for (const auto& v : values) {
    if (v.name == name) return v.value;
  }
  throw Error(ErrorCode::NotFound, "no value named '" + std::string(name) + "'");
}

std::optional<ExactNumber> Solution::find(std::string_view name) const {
  for (const auto& v : values) {
    if (v.name == name) return v.value;
  }
  return std::nullopt;
}

std::vector<ExactNumber> Solution::trace_values() const {
  std::vector<ExactNumber> out;
  for (const auto& t : trace) out.push_back(t.value);
  return out;
}

std::vector<ExactNumber> Solution::root_values() const {
  std::vector<ExactNumber> out;
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

Solution solve_pure_cubic(const ExactNumber& volume, const Metrology& m) {
  require_positive(volume, "volume");
  m.validate();
  Solution s;
  ExactNumber r = igi(s, "obv. 7-8", m.vertical);
  ExactNumber cube = r * volume;
  add_step(s, "rev. 1", cube, "multiply " + show(r) + " by " + show(volume));
  ExactNumber root = cube_root_exact(cube);
  if (is_regular(cube) && cube_root_by_table(cube) != root) {
    throw Error(ErrorCode::InconsistentData, "cube table disagrees with the exact cube root");
  }
  add_step(s, "rev. 2", root, "take the cube root of " + show(cube));

  ExactNumber side = root * m.horizontal;
  ExactNumber depth = root * m.vertical;
  s.values = {{"x", side}, {"z", depth}};
  s.conclusion = show(side) + " is the side of your square. " + show(depth) +
                 " is your depth.";
  return s;
}

std::string describe_repair(const Repair& r) {
  std::string sign = r.delta > 0 ? "+" : "-";
  return sign + std::to_string(std::abs(r.delta)) + " → " + show(r.rhs) +
         " solves with x = " + show(r.x);
}

std::optional<std::int64_t> depressed_scaling(const ExactNumber& c) {
  if (c.sign() <= 0) return std::nullopt;
  ExactNumber cap_value = c * ExactNumber(60);
  Integer cap = cap_value.floor();
  if (!cap_value.is_integer()) cap += 1;
  if (cap < 1) cap = 1;
  const auto limit = static_cast<std::int64_t>(cap);
  for (std::int64_t m = 1; m <= limit; ++m) {
    ExactNumber mm(m);
    if ((mm * mm / c).is_integer() && (mm * mm * mm / c).is_integer()) return m;
  }
  return std::nullopt;
}

namespace {

// The scaled search alone, without trace or diagnostics.
std::optional<ExactNumber> depressed_root(const ExactNumber& c, const ExactNumber& rhs,
                                          std::int64_t m, SearchBounds bounds) {
  ExactNumber mm(m);
  auto k = static_cast<std::uint64_t>((mm * mm / c).numerator());
  ExactNumber target = mm * mm * mm / c * rhs;
  auto t = as_positive_integer(target);
  if (!t) return std::nullopt;
  try {
    return ExactNumber(Integer(search_n3_plus_kn(k, *t, bounds))) / mm;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    return std::nullopt;
  }
}

}  // namespace

Solution solve_depressed_cubic(const ExactNumber& c, const ExactNumber& rhs,
                               SearchBounds bounds) {
  require_positive(c, "cubic coefficient");
  require_positive(rhs, "right-hand side");
  bounds.validate();
  auto scaling = depressed_scaling(c);
  if (!scaling) {
    throw Error(ErrorCode::NoScaling,
                "no m <= 60c with m^2/c and m^3/c integral for c = " + show(c));
  }
  const ExactNumber m(*scaling);
  const ExactNumber multiplier = m * m * m / c;
  const ExactNumber k = m * m / c;
  const ExactNumber target = multiplier * rhs;

  Solution s;
  add_step(s, "scale", multiplier,
           "multiply both sides by " + show(multiplier) + " so that u = " + show(m) +
               "x");
  add_step(s, "target", target, "multiply " + show(rhs) + " by " + show(multiplier));

  auto root = depressed_root(c, rhs, *scaling, bounds);
  if (!root) {
    std::vector<Repair> repairs;
    for (std::int64_t mag = 1; mag <= 4; ++mag) {
      for (std::int64_t delta : {mag, -mag}) {
        ExactNumber candidate = rhs + ExactNumber(delta);
        if (candidate.sign() <= 0) continue;
        if (auto x = depressed_root(c, candidate, *scaling, bounds)) {
          repairs.push_back({delta, candidate, *x});
        }
      }
    }
    std::string message = show(c) + "x^3 + x = " + show(rhs) + " has no rational solution";
    if (!target.is_integer()) message += " (scaled target " + show(target) + " is not an integer)";
    throw NoRationalSolutionError(message, std::move(repairs));
  }
  const ExactNumber u = *root * m;
  add_step(s, "search", u,
           "search n^3 + " + show(k) + "n for " + show(target) + ", and n = " + show(u));
  const ExactNumber volume = c * root->pow(3);
  s.values = {{"x", *root}, {"volume", volume}, {"m", m}, {"k", k}};
  s.conclusion = show(*root) + " is the length. " + show(volume) + " is the volume.";
  return s;
}

Solution solve_no5_style(const ExactNumber& c3, const ExactNumber& c2,
                         const ExactNumber& rhs, const Metrology& m) {
  require_positive(c3, "cubic coefficient");
  require_positive(c2, "square coefficient");
  require_positive(rhs, "right-hand side");
  m.validate();
  if (c3 != c2 * m.vertical) {
    throw Error(ErrorCode::StructureMismatch,
                "cubic coefficient " + show(c3) + " is not " + show(c2) + " times " +
                    show(m.vertical));
  }
  Solution s;
  const ExactNumber multiplier = m.vertical * m.vertical / c2;
  add_step(s, "multiplier", multiplier,
           "multiply both sides by " + show(m.vertical) + " squared over " + show(c2));
  const ExactNumber target = rhs * multiplier;
  add_step(s, "target", target, "multiply " + show(rhs) + " by " + show(multiplier));
  auto t = as_positive_integer(target);
  if (!t) {
    throw Error(ErrorCode::NonIntegerTarget,
                "z^3 + z^2 = " + show(target) + " has no integer target");
  }
  const std::uint64_t z = factor_n2_times_n_plus_q(*t, 1, bounds_up_to_cbrt(*t));
  if (inverse_lookup(TableKind::CubePlusSquare, *t) != z) {
    throw Error(ErrorCode::InconsistentData, "n^3 + n^2 table disagrees with the factorization");
  }
  const ExactNumber depth(Integer{z});
  add_step(s, "root", depth, "factor " + show(target) + " as z^2 (z + 1)");

  const ExactNumber x = depth / m.vertical;
  s.values = {{"x", x}, {"y", c2 * x}, {"z", depth}};
  s.conclusion = show(x) + " is the length. " + show(c2 * x) + " is the width. " +
                 show(depth) + " is the depth.";
  return s;
}

Solution solve_well_difference(const WellProblem& p) {
  Solution s;
  WellPrologue w = well_prologue(s, p, 16, "excess");
  auto n = as_positive_integer(w.reduced);
  if (!n) {
    throw Error(ErrorCode::NotFound,
                "X^2 Y = " + show(w.reduced) + " is not a whole number to factor");
  }
  const ExactNumber big(Integer{factor_n2_times_n_plus_q(*n, -1, bounds_up_to_cbrt(*n))});
  const ExactNumber small = big - ExactNumber(1);
  finish_well(s, p, w, big, small);
  if (p.side == ExactNumber(1, 6) && p.volume == ExactNumber(1) &&
      p.area_plus_volume == ExactNumber(7, 6)) {
    s.notes.push_back("the tablet writes the roots as \"3 2 21 (sic)\"; the third root is " +
                      show(s.roots[2].value));
  }
  return s;
}

Solution solve_well_sum(const WellProblem& p) {
  constexpr std::uint64_t kSixtieths = 60;
  Solution s;
  WellPrologue w = well_prologue(s, p, 10, "sum");
  const ExactNumber scaled = w.reduced * ExactNumber(Integer(kSixtieths)).pow(3);
  auto target = as_positive_integer(scaled);
  if (!target) {
    throw Error(ErrorCode::NotFound,
                "X^2 Y = " + show(w.reduced) + " is not a whole number of 60^-3");
  }
  PairResult pair = factor_pair_sum_constrained(*target, kSixtieths, ExactNumber(1));
  finish_well(s, p, w, pair.x, pair.y);
  return s;
}

Solution solve_well(const WellProblem& p) {
  return p.constraint == SideConstraint::Difference ? solve_well_difference(p)
                                                    : solve_well_sum(p);
}

X3Ax2Result solve_x3_ax2(const ExactNumber& a, const ExactNumber& b, std::int64_t q_max) {
  require_positive(a, "quadratic coefficient");
  require_positive(b, "right-hand side");
  if (q_max < 1) throw Error(ErrorCode::InvalidRange, "q_max must be at least 1");
  bool any_scale = false;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const ExactNumber scale = a / ExactNumber(q);
    auto r = as_positive_integer(b / scale.pow(3));
    if (!r) continue;
    any_scale = true;
    try {
      std::uint64_t n = factor_n2_times_n_plus_q(*r, q, bounds_up_to_cbrt(*r));
      return {scale * ExactNumber(Integer{n}), scale, q, n, *r};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound) throw;
    }
  }
  if (!any_scale) {
    throw Error(ErrorCode::NoScaleFound,
                "no q <= " + std::to_string(q_max) + " makes b / (a/q)^3 an integer");
  }
  throw Error(ErrorCode::NotFound,
              "x^3 + " + show(a) + "x^2 = " + show(b) + " has no root of the form (a/q) n");
}

Solution solve_wang_system(const WangProblem& p) {
  require_positive(p.product, "product");
  require_positive(p.difference, "difference");
  Solution s;
  const ExactNumber a = p.difference / ExactNumber(2);
  add_step(s, "a", a, "halve the difference " + show(p.difference));
  const ExactNumber b = p.product * p.product / (ExactNumber(2) * p.difference);
  add_step(s, "b", b, "square the product and divide by twice the difference");

  X3Ax2Result r = solve_x3_ax2(a, b, p.q_max);
  add_step(s, "scale", r.scale, "divide " + show(a) + " by " + std::to_string(r.q));
  add_step(s, "reduced", ExactNumber(r.reduced_target),
           "divide " + show(b) + " by the cube of " + show(r.scale));
  add_step(s, "n", ExactNumber(Integer{r.n}),
           "factor " + r.reduced_target.str() + " as n^2 (n + " + std::to_string(r.q) + ")");

  const ExactNumber& x = r.x;
  const ExactNumber y = p.product / x;
  const ExactNumber z = x + p.difference;
  if (x * x + y * y != z * z) {
    throw Error(ErrorCode::PythagorasCheckFailed,
                "x^2 + y^2 != z^2 for x = " + x.to_fraction_string() +
                    ", y = " + y.to_fraction_string() + ", z = " + z.to_fraction_string());
  }
  s.values = {{"x", x}, {"y", y}, {"z", z}, {"q", ExactNumber(r.q)}, {"c", r.scale},
              {"n", ExactNumber(Integer{r.n})}};
  s.conclusion = "x = " + x.to_fraction_string() + ", y = " + y.to_fraction_string() +
                 ", z = " + z.to_fraction_string() + ".";
  return s;
}

std::size_t check_claims(Solution& s, const std::vector<NamedValue>& claims) {
  std::size_t mismatches = 0;
  for (const auto& claim : claims) {
    auto derived = s.find(claim.name);
    if (!derived) {
      s.notes.push_back("claimed " + claim.name + " = " + show(claim.value) +
                        " has no derived counterpart");
      ++mismatches;
    } else if (*derived != claim.value) {
      s.notes.push_back("claimed " + claim.name + " = " + show(claim.value) + " (" +
                        claim.value.to_fraction_string() + ") is inconsistent; derived " +
                        claim.name + " = " + show(*derived) + " (" +
                        derived->to_fraction_string() + ")");
      ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace babcubic
