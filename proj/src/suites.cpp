#include "cjp/suites.hpp"

#include <functional>

#include "cjp/bracket.hpp"
#include "cjp/error.hpp"
#include "cjp/jones.hpp"
#include "cjp/linkexpr.hpp"
#include "cjp/symfun.hpp"

namespace cjp {

SuiteResult run_symfun_suite(const SymfunSweep& sweep) {
  SuiteResult result;
  result.name = "symfun";
  std::vector<int> colors;
  std::function<void()> extend = [&] {
    if (!colors.empty()) {
      for (int p = 1; p <= sweep.max_p; ++p) {
        const VerifyReport report = verify_coefficients(ColorVector(colors), p);
        result.checks += report.checks;
        if (!report.pass) {
          result.pass = false;
          result.failures.push_back(report.counterexample.value_or("unspecified failure"));
        }
      }
    }
    if (static_cast<int>(colors.size()) == sweep.max_g) return;
    for (int c = 1; c <= sweep.max_color; ++c) {
      colors.push_back(c);
      extend();
      colors.pop_back();
    }
  };
  extend();
  return result;
}

const std::vector<TorusPair>& default_bracket_pairs() {
  static const std::vector<TorusPair> pairs{{2, 3}, {-2, 3}, {2, 5}, {3, 4}, {2, 2}, {2, 4}};
  return pairs;
}

SuiteResult run_bracket_suite(const std::vector<TorusPair>& pairs) {
  SuiteResult result;
  result.name = "bracket";
  JonesEngine engine;
  for (const TorusPair& t : pairs) {
    const std::string label = "T(" + std::to_string(t.r) + "," + std::to_string(t.s) + ")";
    ++result.checks;
    const LinkExpr e = LinkExpr::cable(LinkExpr::unknot(), 1, t.r, t.s);
    const std::vector<int> colors(static_cast<std::size_t>(e.component_count()), 2);
    const NormalizedValue nv = engine.normalized_jones(e, colors, 1);
    const auto* engine_value = std::get_if<LaurentPoly>(&nv);
    if (engine_value == nullptr) {
      result.pass = false;
      result.failures.push_back(label + ": engine value not divisible by [2]");
      continue;
    }
    const LaurentPoly bracket_value = jones_from_bracket(torus_closure_diagram(t.r, t.s));
    if (!equal_up_to_monomial(*engine_value, bracket_value)) {
      result.pass = false;
      result.failures.push_back(label + ": engine " + to_string(*engine_value) + " vs bracket " +
                                to_string(bracket_value));
    }
  }
  return result;
}

}  // namespace cjp
