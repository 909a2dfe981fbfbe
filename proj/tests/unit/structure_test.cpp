#include <doctest.h>

#include "hweyl/homstar.hpp"
#include "hweyl/random.hpp"
#include "hweyl/structure.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("structure") {
  TEST_CASE("inner derivations") {
    CHECK(ad(P("x1"), P("y1^2")) == P("2*y1"));
    CHECK(ad(P("y1"), P("x1^2")) == P("-2*x1"));
    CHECK(ad(P("1"), P("y1*x1^3")).is_zero());
  }

  TEST_CASE("derivation membership") {
    CHECK(is_hom_derivation(K("1,0"), P("y1", 2)));
    CHECK_FALSE(is_hom_derivation(K("1"), P("y1^2")));
    CHECK(is_hom_derivation(K("1,0"), P("y2^3*x1", 2)));
    CHECK(is_hom_derivation(K("0"), P("y1^5*x1^2")));
    CHECK_FALSE(is_hom_derivation(K("1"), P("y1*x1")));
  }

  TEST_CASE("generator intertwining defects") {
    CHECK(all_zero(derivation_defect_on_generators(K("1,0"), P("y1", 2))));
    CHECK(derivation_defect_on_generators(K("1,0"), P("y1", 2)).size() == 5);
    CHECK_FALSE(all_zero(derivation_defect_on_generators(K("1"), P("y1^2"))));
    CHECK(all_zero(derivation_defect_on_generators(K("1"), P("1"))));
    CHECK(all_zero(derivation_defect_on_generators(K("1,0"), P("y2^3*x1", 2))));
  }

  TEST_CASE("accepted derivations satisfy Leibniz for the star product") {
    RandomSource rng(9);
    const TwistVector k = K("2,0");
    WeylPoly p = P("-1/2*y1 + y2^2*x1 + x2^3", 2);
    REQUIRE(is_hom_derivation(k, p));
    for (int i = 0; i < 20; ++i) {
      WeylPoly a = rng.poly(2, 3), b = rng.poly(2, 3);
      CHECK(ad(p, star(k, a, b)) == star(k, ad(p, a), b) + star(k, a, ad(p, b)));
    }
  }

  TEST_CASE("simplicity reduction") {
    Reduction r = reduce_to_scalar(K("1"), P("y1^2*x1"));
    REQUIRE(r.trace.size() == 3);
    CHECK(to_string(r.trace[0]) == "[x1,.]");
    CHECK(to_string(r.trace[1]) == "[x1,.]");
    CHECK(to_string(r.trace[2]) == "[.,y1]");
    CHECK(r.scalar == 2);
    CHECK(apply_step(K("1"), r.trace[0], P("y1^2*x1")) == P("2*y1*x1 + 2*x1"));

    Reduction c = reduce_to_scalar(K("1"), P("5"));
    CHECK(c.trace.empty());
    CHECK(c.scalar == 5);

    Reduction y = reduce_to_scalar(K("1"), P("y1"));
    CHECK(y.trace.size() == 1);
    CHECK(y.scalar == 1);

    CHECK_THROWS_AS(reduce_to_scalar(K("1"), P("0")), std::invalid_argument);
  }

  TEST_CASE("reduction traces replay") {
    RandomSource rng(10);
    for (int i = 0; i < 50; ++i) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      WeylPoly p = rng.nonzero_poly(n, 4);
      Reduction r = reduce_to_scalar(k, p);
      CHECK(r.scalar != 0);
      CHECK(r.trace.size() <= total_degree(p).value());
      CHECK(replay_trace(k, r.trace, p) == WeylPoly::constant(n, r.scalar));
    }
  }

  TEST_CASE("commuter") {
    CHECK(commuter_probe(K("1"), P("7")));
    CHECK_FALSE(commuter_probe(K("1"), P("y1")));
    CHECK_FALSE(commuter_probe(K("1"), P("y1*x1")));
  }

  TEST_CASE("nuclei") {
    for (Nucleus w : {Nucleus::left, Nucleus::middle, Nucleus::right}) {
      CHECK(nucleus_probe(K("1"), P("0"), w));
      CHECK(nucleus_probe(K("0"), P("y1*x1^2"), w));
    }
    CHECK_FALSE(nucleus_probe(K("1"), P("x1"), Nucleus::left));
    bool has_kx = false;
    for (const auto& d : nucleus_witness_defects(K("3"), P("x1"), Nucleus::left))
      has_kx = has_kx || d == P("3*x1") || d == P("-3*x1");
    CHECK(has_kx);
  }
}
