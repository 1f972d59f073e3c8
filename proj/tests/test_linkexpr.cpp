#include "doctest.h"

#include "cjp/error.hpp"
#include "cjp/linkexpr.hpp"
#include "support.hpp"

using namespace cjp;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse("unknot").kind() == LinkExpr::Kind::Unknot);
  const LinkExpr t = parse("cable(2,3;1;unknot)");
  CHECK(t.kind() == LinkExpr::Kind::Cable);
  CHECK(t.r() == 2);
  CHECK(t.s() == 3);
  CHECK(t.component() == 1);
  CHECK(t.child() == LinkExpr::unknot());
  CHECK(t == LinkExpr::cable(LinkExpr::unknot(), 1, 2, 3));

  const LinkExpr nested = parse("cable(2,3;1;cable(0,2;1;unknot))");
  CHECK(nested.child().component_count() == 2);
  CHECK(nested.component_count() == 2);
  CHECK(parse(" cable ( -2 , 3 ; 1 ; unknot ) ") == LinkExpr::cable(LinkExpr::unknot(), 1, -2, 3));
  CHECK(parse("cable(2,3;2;cable(0,2;1;unknot))").component() == 2);
}

TEST_CASE("syntax and structural errors") {
  CHECK(kind_of([] { parse("unknt"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("cable(2,3;1;unknot"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("cable(2,3;1;unknot) trailing"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse(""); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("cable(2,0;1;unknot)"); }) == ErrorKind::BadCableParams);
  CHECK(kind_of([] { parse("cable(2,3;2;unknot)"); }) == ErrorKind::BadComponentIndex);
  CHECK(kind_of([] { parse("cable(2,3;3;cable(0,2;1;unknot))"); }) == ErrorKind::BadComponentIndex);
  CHECK(kind_of([] { parse("twist(1;0;unknot)"); }) == ErrorKind::BadComponentIndex);
  CHECK(kind_of([] { parse("connsum(unknot,1;unknot,2)"); }) == ErrorKind::BadComponentIndex);
  CHECK(kind_of([] { parse("cable(99999999999999999999,3;1;unknot)"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("component counts") {
  CHECK(component_count(LinkExpr::unknot()) == 1);
  CHECK(component_count(parse("cable(2,2;1;unknot)")) == 2);
  CHECK(component_count(parse("cable(0,4;1;unknot)")) == 4);
  CHECK(component_count(parse("cable(6,4;1;unknot)")) == 2);
  CHECK(component_count(parse("connsum(cable(2,3;1;unknot),1;cable(2,3;1;unknot),1)")) == 1);
  CHECK(component_count(parse("connsum(cable(2,2;1;unknot),2;cable(0,3;1;unknot),1)")) == 4);
}

TEST_CASE("mirror") {
  CHECK(mirror_expr(parse("cable(2,3;1;unknot)")) == parse("cable(-2,3;1;unknot)"));
  CHECK(mirror_expr(parse("twist(5;1;unknot)")) == parse("twist(-5;1;unknot)"));
  CHECK(mirror_expr(LinkExpr::unknot()) == LinkExpr::unknot());
}

TEST_CASE("color validation") {
  CHECK_NOTHROW(validate_colors(LinkExpr::unknot(), {7}));
  CHECK(kind_of([] { validate_colors(parse("cable(2,2;1;unknot)"), {2}); }) == ErrorKind::ColorArityMismatch);
  CHECK(kind_of([] { validate_colors(LinkExpr::unknot(), {0}); }) == ErrorKind::NonPositiveColor);
}

TEST_CASE("print and parse round-trip on random expressions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const LinkExpr e = cjp::testing::random_expr(rng, 3);
    CHECK(parse(print(e)) == e);
    CHECK(component_count(mirror_expr(e)) == component_count(e));
    CHECK(mirror_expr(mirror_expr(e)) == e);
  }
}
