#include <doctest.h>

#include "hweyl/errors.hpp"
#include "hweyl/random.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("twist") {
  TEST_CASE("shift of generators") {
    CHECK(apply_twist(K("1"), P("y1")) == P("y1 + 1"));
    CHECK(apply_twist(K("1"), P("x1")) == P("x1"));
    CHECK(apply_twist(K("1"), P("y1^2")) == P("y1^2 + 2*y1 + 1"));
    CHECK(apply_twist(K("-1/2"), P("y1^2*x1")) == P("y1^2*x1 - y1*x1 + 1/4*x1"));
  }

  TEST_CASE("exponential form") {
    CHECK(twist_via_exp(K("1"), P("y1^2")) == P("y1^2 + 2*y1 + 1"));
    CHECK(twist_via_exp(K("1,0"), P("y1*y2", 2)) == P("y1*y2 + y2", 2));
    RandomSource rng(4);
    for (int i = 0; i < 20; ++i) {
      WeylPoly p = rng.poly(2, 4);
      CHECK(twist_via_exp(TwistVector::zero(2), p) == p);
    }
  }

  TEST_CASE("powers") {
    CHECK(twist_power(K("1"), -1, P("y1")) == P("y1 - 1"));
    CHECK(twist_power(K("2"), 3, P("y1")) == P("y1 + 6"));
    RandomSource rng(5);
    for (int i = 0; i < 20; ++i) {
      TwistVector k = rng.twist(2, TwistPattern::mixed);
      WeylPoly p = rng.poly(2, 4);
      CHECK(twist_power(k, 0, p) == p);
      CHECK(twist_power(k, -1, apply_twist(k, p)) == p);
    }
  }

  TEST_CASE("twist is an algebra endomorphism") {
    RandomSource rng(6);
    for (int i = 0; i < 30; ++i) {
      TwistVector k = rng.twist(3, TwistPattern::mixed);
      WeylPoly a = rng.poly(3, 3), b = rng.poly(3, 3);
      CHECK(apply_twist(k, a * b) == apply_twist(k, a) * apply_twist(k, b));
    }
  }

  TEST_CASE("twist vector accessors") {
    TwistVector k = K("0,3/2,0,-1");
    CHECK(k.dim() == 4);
    CHECK(k[2] == Rational(3, 2));
    CHECK(k.zero_set() == std::vector<std::size_t>{1, 3});
    CHECK(k.support() == std::vector<std::size_t>{2, 4});
    CHECK(k.nonzero_count() == 2);
    CHECK(to_string(k) == "0,3/2,0,-1");
    CHECK_THROWS_AS(K("1,x"), ParseError);
    CHECK_THROWS_AS(apply_twist(K("1,1"), P("y1")), DimensionError);
  }
}
