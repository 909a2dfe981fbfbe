#include <doctest.h>

#include "hweyl/homstar.hpp"
#include "hweyl/random.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("homstar") {
  TEST_CASE("star product") {
    CHECK(star(K("1"), P("x1"), P("y1")) == P("y1*x1 + x1 + 1"));
    CHECK(star(K("1"), P("y1"), P("x1")) == P("y1*x1 + x1"));
    CHECK(star(K("5/3"), P("1"), P("1")) == P("1"));
  }

  TEST_CASE("hom-associativity examples") {
    const TwistVector k = K("1");
    CHECK(hom_assoc_defect(k, P("1"), P("1"), P("1")).is_zero());
    CHECK(hom_assoc_defect(k, P("x1"), P("y1"), P("x1")).is_zero());
    CHECK(hom_assoc_defect(k, P("y1*x1"), P("y1*x1"), P("y1*x1")).is_zero());
    // ...although the product itself is not associative.
    CHECK_FALSE(associator_star(k, P("y1*x1"), P("y1*x1"), P("y1*x1")).is_zero());
  }

  TEST_CASE("weak unit") {
    const TwistVector k = K("1");
    CHECK(star(k, P("y1"), P("1")) == P("y1 + 1"));
    CHECK(star(k, P("x1"), P("1")) == P("x1"));
    for (const char* a : {"y1", "x1", "0"}) {
      auto [r, l] = weak_unit_defect(k, P(a));
      CHECK(r.is_zero());
      CHECK(l.is_zero());
    }
    auto [r, l] = weak_identity_defect(k, P("x1"), P("y1"));
    CHECK_FALSE((r.is_zero() && l.is_zero()));
  }

  TEST_CASE("star commutator") {
    CHECK(commutator_star(K("1"), P("x1"), P("y1")) == P("1"));
    CHECK(commutator_star(K("3"), P("x1"), P("x1")).is_zero());
  }

  TEST_CASE("power associativity fails exactly when the twist is nonzero") {
    WeylPoly e = P("y1*x1");
    CHECK(associator_star(K("0"), e, e, e).is_zero());
    WeylPoly a = associator_star(K("1"), e, e, e);
    CHECK(a.coefficient(Monomial({0}, {1})) == 1);
    CHECK(a == P("2*y1*x1^2 + 4*x1^2 + x1"));
  }

  TEST_CASE("hom-Lie identities") {
    auto [alt, jac] = hom_lie_defects(K("1"), P("x1"), P("y1"), P("y1*x1"));
    CHECK(alt.is_zero());
    CHECK(jac.is_zero());
    RandomSource rng(7);
    for (int i = 0; i < 20; ++i) {
      WeylPoly a = rng.poly(2, 3), b = rng.poly(2, 3), c = rng.poly(2, 3);
      auto [alt0, jac0] = hom_lie_defects(TwistVector::zero(2), a, b, c);
      CHECK(alt0.is_zero());
      CHECK(jac0.is_zero());
      // Classical Jacobi in A_n, written out independently.
      CHECK((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
                .is_zero());
      TwistVector k = rng.twist(2, TwistPattern::all_nonzero);
      auto [altk, jack] = hom_lie_defects(k, a, b, c);
      CHECK(altk.is_zero());
      CHECK(jack.is_zero());
    }
  }

  TEST_CASE("hom-associativity on random triples") {
    RandomSource rng(8);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      WeylPoly a = rng.poly(n, 3), b = rng.poly(n, 3), c = rng.poly(n, 3);
      // Written out from the definition rather than via hom_assoc_defect.
      CHECK(star(k, apply_twist(k, a), star(k, b, c)) == star(k, star(k, a, b), apply_twist(k, c)));
    }
  }
}
