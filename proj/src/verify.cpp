#include "babcubic/verify.hpp"

#include <algorithm>
#include <variant>

#include "babcubic/sexagesimal.hpp"

namespace babcubic {

namespace {

std::string show(const ExactNumber& x) { return render_or_fraction(x); }

bool quadratic_contains(const QuadraticOutcome& q, const WellAnswer& a) {
  const auto* answers = std::get_if<std::vector<WellAnswer>>(&q);
  return answers && std::find(answers->begin(), answers->end(), a) != answers->end();
}

}  // namespace

VerificationReport verify(const Problem& p) {
  VerificationReport r;
  r.cubic = std::visit([](const auto& data) { return eliminated_cubic(data); }, p.data);
  for (const auto& root : rational_roots_cubic(r.cubic)) {
    if (root.sign() > 0) r.oracle_roots.insert(root);
  }
  const auto* well = std::get_if<WellProblem>(&p.data);
  if (well && well->area_plus_volume > well->volume) r.quadratic = quadratic_reduction(*well);

  try {
    r.solution = solve(p);
  } catch (const Error& e) {
    r.failure = e.code();
    r.failure_message = e.what();
  }

  if (r.solution) {
    const ExactNumber& x = r.solution->value("x");
    r.agrees = r.oracle_roots.count(x) > 0;
    r.findings.push_back(r.agrees ? "oracle roots contain x = " + show(x)
                                  : "oracle roots do not contain x = " + show(x));
    if (well) {
      WellAnswer answer{x, r.solution->value("y"), r.solution->value("z")};
      bool same = r.quadratic && quadratic_contains(*r.quadratic, answer);
      r.findings.push_back(same ? "quadratic reduction gives the same (x, y, z)"
                                : "quadratic reduction disagrees");
      r.agrees = r.agrees && same;
    }
  } else {
    r.agrees = r.oracle_roots.empty();
    r.findings.push_back(r.agrees ? "oracle confirms: no positive rational root"
                                  : "oracle finds a positive rational root the method missed");
    if (r.quadratic && std::holds_alternative<IrrationalSolution>(*r.quadratic)) {
      r.findings.push_back("quadratic discriminant " +
                           show(std::get<IrrationalSolution>(*r.quadratic).discriminant) +
                           " is not a rational square");
    }
  }
  return r;
}

}  // namespace babcubic
