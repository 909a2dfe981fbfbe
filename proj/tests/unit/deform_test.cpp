#include <doctest.h>

#include "hweyl/deform.hpp"
#include "hweyl/errors.hpp"
#include "hweyl/homstar.hpp"
#include "hweyl/random.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("deform") {
  const ParamMap one(std::vector<std::size_t>{1}, 1);

  TEST_CASE("deformed star product") {
    ParamPoly s = deform_star(P("y1"), P("x1"), one);
    CHECK(format(s) == "y1*x1 + t1*x1");
    CHECK(order_term(s, {0}) == P("y1*x1"));
    CHECK(order_term(s, {1}) == P("x1"));
    CHECK(deform_star(P("1"), P("1"), one) == ParamPoly::constant(1, P("1")));
    CHECK(specialize(s, {1}) == P("y1*x1 + x1"));
    CHECK(specialize(s, {1}) == star(K("1"), P("y1"), P("x1")));
  }

  TEST_CASE("deformed twist") {
    ParamPoly t = deform_twist(P("y1^2"), one);
    CHECK(format(t) == "y1^2 + 2*t1*y1 + t1^2");
    CHECK(order_term(t, {2}) == P("1"));
    CHECK(deform_twist(P("x1^3"), one) == ParamPoly::constant(1, P("x1^3")));
    CHECK(specialize(t, {0}) == order_term(t, {0}));
  }

  TEST_CASE("deformed bracket") {
    CHECK(deform_bracket(P("x1"), P("y1"), one) == ParamPoly::constant(1, P("1")));
    CHECK(deform_bracket(P("y1*x1"), P("y1*x1"), one).is_zero());
    CHECK(format(deform_bracket(P("x1"), P("y1^2"), one)) == "2*y1 + 2*t1");
  }

  TEST_CASE("parameter maps") {
    CHECK_THROWS_AS(ParamMap({1, 1}, 2), IndexError);
    CHECK_THROWS_AS(ParamMap({3}, 2), IndexError);
    ParamMap pm = ParamMap::support_of(K("0,2,-1"));
    CHECK(pm.positions() == std::vector<std::size_t>{2, 3});
    CHECK(pm.twist_for({2, -1}) == K("0,2,-1"));
    CHECK_THROWS_AS(order_term(deform_twist(P("y1"), one), {0, 0}), DimensionError);
  }

  TEST_CASE("specialization coherence and finiteness") {
    RandomSource rng(13);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      ParamMap pm = ParamMap::support_of(k);
      std::vector<Rational> values;
      for (std::size_t p : pm.positions()) values.push_back(k[p]);
      WeylPoly a = rng.poly(n, 3), b = rng.poly(n, 3);
      ParamPoly s = deform_star(a, b, pm);
      CHECK(specialize(s, values) == star(k, a, b));
      std::size_t bound = 1;
      for (std::size_t p : pm.positions()) {
        Degree d = deg_y(a * b, p);
        bound *= 1 + (d.is_minus_infinity() ? 0 : d.value());
      }
      CHECK(s.terms().size() <= bound);
    }
  }

  TEST_CASE("series identities") {
    RandomSource rng(14);
    for (int i = 0; i < 20; ++i) {
      TwistVector k = rng.twist(2, TwistPattern::all_nonzero);
      ParamMap pm = ParamMap::support_of(k);
      WeylPoly a = rng.poly(2, 2), b = rng.poly(2, 2), c = rng.poly(2, 2);
      CHECK(series_hom_assoc_defect(a, b, c, pm).is_zero());
      auto [alt, jac] = series_hom_lie_defects(a, b, c, pm);
      CHECK(alt.is_zero());
      CHECK(jac.is_zero());
    }
  }
}
