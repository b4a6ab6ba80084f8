#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/expr.hpp"
#include "support.hpp"

using namespace cherednik;
using testing_support::braided;
using testing_support::parse;
using testing_support::rational;

namespace {

std::size_t error_position(const AlgebraPtr& alg, const std::string& text) {
  try {
    parse(alg, text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("basic parsing") {
    const auto r = rational(4, 1, 2);
    CHECK(parse(r, "x1") == PBWElement::x(r, 1));
    CHECK(parse(r, "x1^3") == PBWElement::x(r, 1, 3));
    CHECK(parse(r, "2*y2 - 1/2") ==
          PBWElement::y(r, 2) * ParamScalar(2) - PBWElement::scalar(r, ParamScalar(CycRational(Rational(1, 2)))));
    CHECK(parse(r, "z*c[3]").to_string() == "z*c[3]");
    CHECK(parse(r, "t(1;1)*t(1;3)").to_string() == "1");
    CHECK(parse(r, "-(x1 + x2)") == -(PBWElement::x(r, 1) + PBWElement::x(r, 2)));
    CHECK(parse(r, "(x1 + y1)^2") == (PBWElement::x(r, 1) + PBWElement::y(r, 1)) *
                                           (PBWElement::x(r, 1) + PBWElement::y(r, 1)));
    CHECK(parse(r, "y1*x1") == PBWElement::y(r, 1) * PBWElement::x(r, 1));
    CHECK(parse(r, "s(1,2;1)") == PBWElement::group(r, make_s(2, 4, 1, 2, 1)));
  }

  TEST_CASE("adjacent group factors multiply before the membership check") {
    // s_12 alone is not in mu(G(2,2,3)), s_12 t_2 is sigma_12
    const auto b = braided(2, 2, 3);
    CHECK(parse(b, "s(1,2;0)*t(2;1)") == PBWElement::group(b, make_sigma(3, 2, 1, 2, 0)));
    CHECK(parse(b, "sg(1,2;0)") == PBWElement::group(b, make_sigma(3, 2, 1, 2, 0)));
    CHECK_THROWS_AS(parse(b, "s(1,2;0)"), ParseError);
  }

  TEST_CASE("parse errors carry positions") {
    const auto r = rational(2, 1, 2);
    CHECK(error_position(r, "y1*+x2") == 3);
    CHECK(error_position(r, "x1 x2") == 3);
    CHECK(error_position(r, "x") == 1);
    CHECK(error_position(r, "(x1") == 3);
    CHECK(error_position(r, "1/0") == 3);
    CHECK(error_position(r, "x3") >= 1);
    CHECK(error_position(r, "c[2]") > 0);
    CHECK(error_position(r, "s(1,1;0)") > 0);
    CHECK(error_position(r, "q") == 0);
    CHECK(error_position(rational(3, 1, 3), "sg(1,2;0)") > 0);
    CHECK_NOTHROW(parse(r, "c[1]"));
    CHECK_NOTHROW(parse(rational(6, 2, 3), "c[2]"));
  }

  TEST_CASE("property: printed form parses back") {
    Rng rng(51);
    for (const auto& alg : {rational(2, 1, 3), rational(4, 2, 3), braided(2, 1, 3), braided(4, 1, 2),
                            rational(6, 3, 2)}) {
      CAPTURE(alg->name());
      for (int trial = 0; trial < 60; ++trial) {
        const PBWElement u = random_element(alg, rng, RandomElementOptions{3, 4});
        CAPTURE(u.to_string());
        CHECK(parse(alg, u.to_string()) == u);
      }
    }
  }

  TEST_CASE("printing never nests parentheses") {
    const auto r = rational(4, 1, 2);
    const PBWElement u = parse(r, "(1 + z)*(c1 - c[2])*x1");
    CHECK(u.to_string() == "-c[2]*x1 - z*c[2]*x1 + c1*x1 + z*c1*x1");
    CHECK(parse(r, "0").to_string() == "0");
  }
}
