#include <doctest.h>

#include "hweyl/errors.hpp"
#include "hweyl/random.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("expr") {
  TEST_CASE("products") {
    CHECK(format(P("x1*y1")) == "y1*x1 + 1");
    CHECK(format(P("x1·y1")) == "y1*x1 + 1");
    CHECK(format(P("x1 y1")) == "y1*x1 + 1");
    CHECK(format(parse_poly("x1 ⊛ y1", K("1"))) == "y1*x1 + x1 + 1");
    CHECK(format(parse_poly("x1 @ y1", K("1"))) == "y1*x1 + x1 + 1");
    CHECK(format(P("((y1^2))")) == "y1^2");
  }

  TEST_CASE("star chains associate to the left") {
    const TwistVector k = K("1");
    CHECK(parse_poly("y1 @ x1 @ y1", k) == parse_poly("(y1 @ x1) @ y1", k));
    CHECK(parse_poly("y1 @ x1 @ y1", k) != parse_poly("y1 @ (x1 @ y1)", k));
  }

  TEST_CASE("canonical printing") {
    CHECK(format(P("-3/2*x1")) == "-3/2*x1");
    CHECK(format(P("0")) == "0");
    CHECK(format(P("x2 - 3/2*x2 + y1^2*x1 + 1", 2)) == "y1^2*x1 - 1/2*x2 + 1");
    CHECK(format(Monomial({2}, {1})) == "y1^2*x1");
    CHECK(format(P("-(y1 - 1)^2")) == "-y1^2 + 2*y1 - 1");
  }

  TEST_CASE("errors carry positions") {
    try {
      P("x1 + * y1");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_poly("x1 @ y1 * x1", K("1")), ParseError);
    CHECK_THROWS_AS(P("0.5"), ParseError);
    CHECK_THROWS_AS(P("(x1"), ParseError);
    CHECK_THROWS_AS(P("x1^-1"), ParseError);
    CHECK_THROWS_AS(P("x3", 2), IndexError);
    CHECK_THROWS_AS(P("x0"), IndexError);
  }

  TEST_CASE("printing is a fixed point of parsing") {
    RandomSource rng(15);
    for (int i = 0; i < 200; ++i) {
      std::size_t n = rng.uniform(1, 3);
      WeylPoly p = rng.poly(n, 4, 6);
      std::string text = format(p);
      WeylPoly back = parse_poly(text, TwistVector::zero(n));
      CHECK(back == p);
      CHECK(format(back) == text);
    }
  }
}
