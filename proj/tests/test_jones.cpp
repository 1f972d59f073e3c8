#include "doctest.h"

#include "cjp/bracket.hpp"
#include "cjp/error.hpp"
#include "cjp/jones.hpp"
#include "support.hpp"

using namespace cjp;
using cjp::testing::mono;
using cjp::testing::poly;

namespace {

const LinkExpr kTrefoil = LinkExpr::cable(LinkExpr::unknot(), 1, 2, 3);

std::vector<int> random_colors(std::mt19937_64& rng, int count, int max_color) {
  std::vector<int> c(static_cast<std::size_t>(count));
  for (int& x : c) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_color));
  return c;
}

}  // namespace

TEST_CASE("engine examples") {
  for (int n = 1; n <= 6; ++n) CHECK(colored_jones(LinkExpr::unknot(), {n}) == quantum_integer(n));
  CHECK(colored_jones(kTrefoil, {2}) == poly({{16, 1}, {12, 1}, {8, 1}, {0, -1}}));
  CHECK(colored_jones(kTrefoil, {2}) == multiply(mono(1, 10), quantum_integer(4)) - multiply(mono(1, 2), quantum_integer(2)));
  const LinkExpr hopf = parse("cable(2,2;1;unknot)");
  CHECK(colored_jones(hopf, {2, 2}) == poly({{12, 1}, {8, 1}, {4, 1}, {0, 1}}));
  CHECK(colored_jones(hopf, {2, 2}) == multiply(mono(1, 6), quantum_integer(4)));
  CHECK(colored_jones(parse("cable(0,2;1;unknot)"), {2, 2}) == multiply(quantum_integer(2), quantum_integer(2)));
  for (int r : {-2, 1, 3})
    for (int n : {2, 3, 4})
      CHECK(colored_jones(LinkExpr::cable(LinkExpr::unknot(), 1, r, 1), {n}) ==
            multiply(mono(1, r * (n * n - 1)), quantum_integer(n)));
}

TEST_CASE("signed color fetch") {
  CHECK(signed_color_fetch(kTrefoil, {2}, 1, 0).is_zero());
  CHECK(signed_color_fetch(LinkExpr::unknot(), {1}, 1, -2) == -quantum_integer(2));
  CHECK(signed_color_fetch(LinkExpr::unknot(), {1}, 1, 4) == quantum_integer(4));
  CHECK(signed_color_fetch(kTrefoil, {2}, 1, -3) == -colored_jones(kTrefoil, {3}));
  CHECK_THROWS_AS(signed_color_fetch(kTrefoil, {2}, 2, 3), Error);
}

TEST_CASE("cable term exponents") {
  CHECK(cable_term_exponent(2, 3, 1) == 10);
  CHECK(cable_term_exponent(2, 3, -1) == 2);
  for (int s = 1; s <= 5; ++s)
    for (int m = -4; m <= 4; ++m) CHECK(cable_term_exponent(0, s, m) == 0);
}

TEST_CASE("normalized values") {
  for (int n = 1; n <= 5; ++n) {
    const NormalizedValue v = normalized_jones(LinkExpr::unknot(), {n}, 1);
    REQUIRE(std::holds_alternative<LaurentPoly>(v));
    CHECK(std::get<LaurentPoly>(v) == LaurentPoly(1L));
  }
  CHECK(std::get<LaurentPoly>(normalized_jones(kTrefoil, {2}, 1)) == poly({{14, 1}, {6, 1}, {2, -1}}));
  CHECK(std::get<LaurentPoly>(normalized_jones(parse("cable(0,2;1;unknot)"), {2, 2}, 2)) == LaurentPoly(1L));

  // A knot normalized twice leaves one factor of [N] undivided.
  const NormalizedValue deferred = normalized_jones(kTrefoil, {2}, 2);
  REQUIRE(std::holds_alternative<DeferredRatio>(deferred));
  CHECK(std::get<DeferredRatio>(deferred).numerator == poly({{14, 1}, {6, 1}, {2, -1}}));
  CHECK(std::get<DeferredRatio>(deferred).color == 2);
  CHECK(std::get<DeferredRatio>(deferred).power == 1);

  CHECK_THROWS_AS(normalized_jones(parse("cable(0,2;1;unknot)"), {2, 3}, 1), Error);
  CHECK_THROWS_AS(normalized_jones(kTrefoil, {2}, 0), Error);
}

TEST_CASE("twist equals (r,1)-cabling") {
  std::mt19937_64 rng(31);
  JonesEngine engine;
  for (int trial = 0; trial < 60; ++trial) {
    const LinkExpr e = cjp::testing::random_expr(rng, 2);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(e.component_count()));
    const std::vector<int> colors = random_colors(rng, e.component_count(), 4);
    for (int r = -3; r <= 3; ++r)
      CHECK(engine.colored_jones(LinkExpr::cable(e, i, r, 1), colors) ==
            engine.colored_jones(LinkExpr::twist(e, i, r), colors));
  }
}

TEST_CASE("mirror property") {
  std::mt19937_64 rng(37);
  JonesEngine engine;
  for (int trial = 0; trial < 60; ++trial) {
    const LinkExpr e = cjp::testing::random_expr(rng, 2);
    const std::vector<int> colors = random_colors(rng, e.component_count(), 4);
    CHECK(engine.colored_jones(mirror_expr(e), colors) == mirror(engine.colored_jones(e, colors)));
  }
}

TEST_CASE("unlink is a product of quantum integers") {
  for (int s = 1; s <= 4; ++s) {
    const LinkExpr unlink = LinkExpr::cable(LinkExpr::unknot(), 1, 0, s);
    std::mt19937_64 rng(static_cast<unsigned>(s));
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<int> colors = random_colors(rng, s, 4);
      LaurentPoly expected(1L);
      for (int n : colors) expected = multiply(expected, quantum_integer(n));
      CHECK(colored_jones(unlink, colors) == expected);
    }
  }
}

TEST_CASE("trivial color collapse") {
  // Coloring every new component 1 removes the cable.
  const LinkExpr child = parse("cable(2,2;1;unknot)");
  for (int s : {2, 4}) {
    const LinkExpr e = LinkExpr::cable(child, 2, 2, s);
    const auto g = static_cast<std::size_t>(e.cable_gcd());
    std::vector<int> colors{3};
    colors.insert(colors.end(), g, 1);
    CHECK(colored_jones(e, colors) == colored_jones(child, {3, 1}));
  }
}

TEST_CASE("Hopf links match [ab] up to a monomial") {
  const LinkExpr hopf = parse("cable(2,2;1;unknot)");
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const auto match = equal_up_to_monomial(colored_jones(hopf, {a, b}), quantum_integer(a * b));
      CHECK(match.has_value());
    }
}

TEST_CASE("torus knot symmetry T(p,q) = T(q,p) up to a monomial") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}})
    for (int n = 2; n <= 5; ++n) {
      const LaurentPoly a = colored_jones(LinkExpr::cable(LinkExpr::unknot(), 1, p, q), {n});
      const LaurentPoly b = colored_jones(LinkExpr::cable(LinkExpr::unknot(), 1, q, p), {n});
      const auto match = equal_up_to_monomial(a, b);
      REQUIRE(match.has_value());
      CHECK(match->sign == 1);
      CHECK_FALSE(match->mirrored);
    }
}

TEST_CASE("connected sums") {
  const LinkExpr fig = parse("cable(2,5;1;unknot)");
  const LinkExpr t34 = parse("cable(3,4;1;unknot)");
  for (int n = 1; n <= 4; ++n) {
    const LaurentPoly a = colored_jones(LinkExpr::connsum(LinkExpr::connsum(kTrefoil, 1, fig, 1), 1, t34, 1), {n});
    const LaurentPoly b = colored_jones(LinkExpr::connsum(kTrefoil, 1, LinkExpr::connsum(fig, 1, t34, 1), 1), {n});
    const LaurentPoly c = colored_jones(LinkExpr::connsum(LinkExpr::connsum(kTrefoil, 1, t34, 1), 1, fig, 1), {n});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(colored_jones(LinkExpr::connsum(kTrefoil, 1, LinkExpr::unknot(), 1), {n}) == colored_jones(kTrefoil, {n}));
  }
  CHECK(colored_jones(LinkExpr::connsum(kTrefoil, 1, kTrefoil, 1), {2}) ==
        multiply(poly({{14, 1}, {6, 1}, {2, -1}}), colored_jones(kTrefoil, {2})));

  // Joined components keep their color; other components keep theirs.
  const LinkExpr mixed = LinkExpr::connsum(parse("cable(2,2;1;unknot)"), 2, parse("cable(0,2;1;unknot)"), 1);
  CHECK(colored_jones(mixed, {2, 3, 4}) ==
        multiply(colored_jones(parse("cable(2,2;1;unknot)"), {2, 3}), quantum_integer(4)));

  try {
    connected_sum(quantum_integer(2), 2, quantum_integer(3), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ColorMismatchAtConnSum);
  }
}

TEST_CASE("memoization does not change results") {
  const LinkExpr e = parse("cable(2,5;1;twist(-1;1;cable(2,3;1;unknot)))");
  JonesEngine warm;
  JonesEngine tiny(EngineOptions{0});
  for (int n = 1; n <= 5; ++n) {
    const LaurentPoly first = warm.colored_jones(e, {n});
    CHECK(warm.colored_jones(e, {n}) == first);
    CHECK(tiny.colored_jones(e, {n}) == first);
    CHECK(colored_jones(e, {n}) == first);
  }
  CHECK(warm.cache_entries() > 0);
  CHECK(tiny.cache_entries() == 0);
  warm.clear_cache();
  CHECK(warm.cache_entries() == 0);
}

TEST_CASE("engine rejects bad colors") {
  CHECK_THROWS_AS(colored_jones(kTrefoil, {2, 2}), Error);
  CHECK_THROWS_AS(colored_jones(kTrefoil, {0}), Error);
}
