#include <cmath>
#include <numbers>

#include "doctest.h"

#include "cjp/asympt.hpp"
#include "cjp/error.hpp"
#include "support.hpp"

using namespace cjp;

namespace {

const LinkExpr kTrefoil = LinkExpr::cable(LinkExpr::unknot(), 1, 2, 3);

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

}  // namespace

TEST_CASE("l'Hospital limits") {
  for (int n : {2, 3, 5}) {
    const RootOfUnityPoint pt(n);
    CHECK(near(lhospital_limit(quantum_integer(2 * n), quantum_integer(n), pt), -2.0));
    const LaurentPoly sq = multiply(quantum_integer(n), quantum_integer(n));
    CHECK(near(lhospital_limit(sq, sq, pt), 1.0));
    const LaurentPoly p = cjp::testing::poly({{5, 2}, {-3, -7}});
    CHECK(near(lhospital_limit(p, LaurentPoly(1L), pt), eval_at_root(p, pt)));
  }
  const RootOfUnityPoint pt(4);
  CHECK(kind_of([&] { lhospital_limit(LaurentPoly(1L), quantum_integer(4), pt); }) == ErrorKind::DivergentLimit);
  CHECK(kind_of([&] { lhospital_limit(quantum_integer(4), LaurentPoly(), pt); }) == ErrorKind::InvalidArgument);

  LaurentPoly deep(1L);
  for (int k = 0; k < 10; ++k) deep = multiply(deep, quantum_integer(4));
  CHECK(kind_of([&] { lhospital_limit(deep, deep, pt); }) == ErrorKind::DepthExceeded);
  CHECK(near(lhospital_limit(deep, deep, pt, LimitOptions{1e-8, 12}), 1.0, 1e-6));
}

TEST_CASE("vanishing orders") {
  for (int n = 2; n <= 8; ++n) {
    const RootOfUnityPoint pt(n);
    LaurentPoly p(1L);
    for (int s = 0; s <= 4; ++s) {
      CHECK(vanishing_order(p, pt) == s);
      p = multiply(p, quantum_integer(n));
    }
  }
  CHECK_THROWS_AS(vanishing_order(LaurentPoly(), RootOfUnityPoint(3)), Error);
}

TEST_CASE("normalized evaluation examples") {
  for (int n : {1, 2, 3, 7, 17}) CHECK(near(eval_normalized_at_root(LinkExpr::unknot(), n), 1.0));
  const auto v = eval_normalized_at_root(kTrefoil, 2);
  CHECK(near(v, {0.0, -3.0}));
  CHECK(std::abs(v) == doctest::Approx(3.0));
  CHECK(near(eval_normalized_at_root(parse("cable(0,2;1;unknot)"), 2, 2), 1.0));
}

TEST_CASE("exact and l'Hospital paths agree") {
  JonesEngine engine;
  for (const char* text : {"cable(2,3;1;unknot)", "cable(-2,5;1;unknot)", "cable(2,4;1;unknot)",
                           "cable(2,5;1;twist(-1;1;cable(2,3;1;unknot)))", "cable(0,2;1;unknot)"}) {
    const LinkExpr e = parse(text);
    for (int n = 2; n <= 9; ++n) {
      const auto exact = eval_normalized_at_root(engine, e, n, 1);
      const auto limit = eval_normalized_by_limit(engine, e, n, 1);
      CHECK_MESSAGE(std::abs(exact - limit) <= 1e-6 * std::max(1.0, std::abs(exact)), text << " N=" << n);
    }
  }
  // Split multiplicity 2 on the 2-component unlink.
  for (int n = 2; n <= 6; ++n) {
    const LinkExpr unlink = parse("cable(0,2;1;unknot)");
    CHECK(near(eval_normalized_by_limit(engine, unlink, n, 2), eval_normalized_at_root(engine, unlink, n, 2), 1e-6));
  }
}

TEST_CASE("unlink vanishing order equals the number of components") {
  JonesEngine engine;
  for (int s = 1; s <= 3; ++s)
    for (int n = 2; n <= 8; ++n) {
      const LinkExpr unlink = LinkExpr::cable(LinkExpr::unknot(), 1, 0, s);
      const LaurentPoly j = engine.colored_jones(unlink, std::vector<int>(static_cast<std::size_t>(s), n));
      CHECK(vanishing_order(j, RootOfUnityPoint(n)) == s);
    }
}

TEST_CASE("framing does not change the modulus") {
  for (int f = -3; f <= 3; ++f)
    for (int n = 2; n <= 7; ++n) {
      const double base = std::abs(eval_normalized_at_root(kTrefoil, n));
      CHECK(std::abs(eval_normalized_at_root(LinkExpr::twist(kTrefoil, 1, f), n)) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("growth tables") {
  const auto unknot = growth_table(LinkExpr::unknot(), {2, 4, 8});
  REQUIRE(unknot.size() == 3);
  for (const auto& r : unknot) {
    CHECK(r.abs_eval == doctest::Approx(1.0));
    REQUIRE(r.vc_value.has_value());
    CHECK(std::abs(*r.vc_value) < 1e-12);
    CHECK(r.maxabscoeff == 1);
  }

  const auto trefoil = growth_table(kTrefoil, {8, 16, 32, 64, 128, 256, 512});
  CHECK(decay_check(trefoil).pass);
  CHECK(trefoil[0].n == 8);
  CHECK(trefoil.back().n == 512);

  const LinkExpr sum = LinkExpr::connsum(kTrefoil, 1, kTrefoil, 1);
  const auto squared = growth_table(sum, {8, 16, 32});
  for (std::size_t k = 0; k < squared.size(); ++k)
    CHECK(squared[k].abs_eval == doctest::Approx(trefoil[k].abs_eval * trefoil[k].abs_eval).epsilon(1e-9));

  // Threads do not change any recorded value.
  const auto parallel = growth_table(kTrefoil, {8, 16, 32, 64, 128, 256, 512}, 1, 4);
  for (std::size_t k = 0; k < parallel.size(); ++k) {
    CHECK(parallel[k].n == trefoil[k].n);
    CHECK(parallel[k].maxdeg == trefoil[k].maxdeg);
    CHECK(parallel[k].mindeg == trefoil[k].mindeg);
    CHECK(parallel[k].maxabscoeff == trefoil[k].maxabscoeff);
    CHECK(parallel[k].abs_eval == trefoil[k].abs_eval);
  }

  CHECK_THROWS_AS(growth_table(kTrefoil, {}), Error);
  CHECK_THROWS_AS(growth_table(kTrefoil, {8, 4}), Error);
}

TEST_CASE("moderation") {
  const auto unknot = growth_table(LinkExpr::unknot(), {2, 4, 8, 16});
  const ModerationReport u = moderation_check(unknot);
  CHECK(u.pass);
  CHECK(u.coefficient_fit.slope == doctest::Approx(0.0));

  const auto trefoil = growth_table(kTrefoil, {8, 16, 32, 64, 128, 256, 512});
  const ModerationReport t = moderation_check(trefoil);
  CHECK(t.pass);
  CHECK(t.span_fit.slope == doctest::Approx(2.0).epsilon(0.05));

  std::vector<GrowthRecord> exponential;
  for (int n : {8, 16, 32, 64, 128}) {
    GrowthRecord r;
    r.n = n;
    r.maxdeg = n * n;
    r.mindeg = 0;
    r.maxabscoeff = Integer(1) << n;
    exponential.push_back(r);
  }
  CHECK_FALSE(moderation_check(exponential).pass);

  try {
    moderation_check(std::vector<GrowthRecord>(trefoil.begin(), trefoil.begin() + 3));
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
}

TEST_CASE("line fits") {
  const LineFit f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.residual == doctest::Approx(0.0));
}

TEST_CASE("decay check failures") {
  std::vector<GrowthRecord> rising;
  for (int n : {32, 64, 128}) {
    GrowthRecord r;
    r.n = n;
    r.vc_value = n / 1000.0;
    rising.push_back(r);
  }
  CHECK_FALSE(decay_check(rising).pass);
  std::vector<GrowthRecord> high = rising;
  high[0].vc_value = 0.9, high[1].vc_value = 0.8, high[2].vc_value = 0.5;
  CHECK_FALSE(decay_check(high).pass);
  high[2].vc_value = 0.2;
  CHECK(decay_check(high).pass);
}
