#include <doctest.h>

#include "hweyl/errors.hpp"
#include "hweyl/homstar.hpp"
#include "hweyl/morphisms.hpp"
#include "hweyl/random.hpp"
#include "support.hpp"

using namespace hweyl;
using test::K;
using test::P;

TEST_SUITE("morphisms") {
  TEST_CASE("isomorphism for one generator pair") {
    GeneratorImages phi = build_iso(K("2"), K("3"));
    CHECK(phi.x_img[0] == P("3/2*x1"));
    CHECK(phi.y_img[0] == P("2/3*y1"));
    GeneratorImages inv = build_inverse_iso(K("2"), K("3"));
    CHECK(inv.x_img[0] == P("2/3*x1"));
    CHECK(inv.y_img[0] == P("3/2*y1"));
    CHECK(apply_morphism(phi, P("y1*x1")) == P("y1*x1"));
    CHECK(check_relations_and_intertwine(K("2"), K("3"), phi).accepted());
  }

  TEST_CASE("order-preserving bijections") {
    GeneratorImages phi = build_iso(K("0,2"), K("5,0"));
    CHECK(phi.x_img[0] == P("x2", 2));
    CHECK(phi.y_img[0] == P("y2", 2));
    CHECK(phi.x_img[1] == P("5/2*x1", 2));
    CHECK(phi.y_img[1] == P("2/5*y1", 2));

    GeneratorImages same = build_iso(K("1,-2,0"), K("1,-2,0"));
    GeneratorImages id = GeneratorImages::identity(3);
    CHECK(same.x_img == id.x_img);
    CHECK(same.y_img == id.y_img);
  }

  TEST_CASE("no isomorphism when nonzero counts differ") {
    CHECK_THROWS_AS(build_iso(K("1,0"), K("1,1")), ClassificationError);
    CHECK_THROWS_AS(build_inverse_iso(K("0"), K("1")), ClassificationError);
  }

  TEST_CASE("multiplicative extension") {
    GeneratorImages id = GeneratorImages::identity(1);
    CHECK(apply_morphism(id, P("y1^2*x1 + 3")) == P("y1^2*x1 + 3"));
    GeneratorImages shear({P("x1")}, {P("y1 + x1")});
    CHECK(apply_morphism(shear, P("y1*x1")) == P("y1*x1 + x1^2"));
  }

  TEST_CASE("relation checker") {
    GeneratorImages shear({P("x1")}, {P("y1 + x1")});
    CHECK(check_relations_and_intertwine(K("0"), K("0"), shear).accepted());

    GeneratorImages bad({P("3/2*x1")}, {P("2*y1")});
    MorphismReport r = check_relations_and_intertwine(K("2"), K("3"), bad);
    CHECK_FALSE(r.accepted());
    bool intertwine_failed = false;
    for (const auto& f : r.failures()) intertwine_failed = intertwine_failed || f.id == "intertwine_y(1)";
    CHECK(intertwine_failed);
  }

  TEST_CASE("equation-set checker") {
    MorphismReport ok = check_hom_constraints(K("2"), K("3"), build_iso(K("2"), K("3")));
    CHECK(ok.accepted());
    HomDecomposition d = decompose_images(K("3"), build_iso(K("2"), K("3")));
    CHECK(d.g[0][0] == Rational(2, 3));

    GeneratorImages g1({P("3/2*x1")}, {P("y1")});
    MorphismReport bad = check_hom_constraints(K("2"), K("3"), g1);
    CHECK_FALSE(bad.accepted());
    REQUIRE_FALSE(bad.failures().empty());
    CHECK(bad.failures().front().id == "coeff2(1)");

    GeneratorImages shear({P("x1")}, {P("y1 + x1")});
    CHECK(check_hom_constraints(K("0"), K("0"), shear).accepted());

    GeneratorImages square({P("x1")}, {P("y1^2")});
    MorphismReport sq = check_hom_constraints(K("1"), K("1"), square);
    CHECK(sq.structural_rejection.has_value());
    CHECK_FALSE(sq.accepted());
  }

  // The coefficient condition on f uses the target twist. Here f for x1 is
  // (1, -1): its pairing with k' = (1, 1) vanishes, its pairing with
  // k = (1, 2) does not, and the map is a genuine isomorphism.
  TEST_CASE("coefficient condition on f refers to the target twist") {
    const TwistVector k = K("1,2"), k2 = K("1,1");
    GeneratorImages phi({P("x1 + y1 - y2", 2), P("1/2*x2 - 1/2*y1 + 1/2*y2", 2)}, {P("y1", 2), P("2*y2", 2)});
    CHECK(check_relations_and_intertwine(k, k2, phi).accepted());
    MorphismReport eq = check_hom_constraints(k, k2, phi);
    CHECK(eq.accepted());
    HomDecomposition d = decompose_images(k2, phi);
    CHECK(d.f[0][0] == 1);
    CHECK(d.f[1][0] == -1);
  }

  // With two nonzero target entries, a polynomial in the difference
  // y1 - y2 is fixed by the shift and may appear nonlinearly. The relation
  // checker (authoritative) accepts; the equation-set checker, which assumes
  // shifted y's occur only linearly, rejects structurally.
  TEST_CASE("shift-invariant nonlinear images are outside the equation set") {
    const TwistVector k = K("1,1");
    WeylPoly d2 = P("(y1 - y2)^2", 2);
    GeneratorImages phi({P("x1", 2) + scale(3, d2), P("x2", 2) - scale(3, d2)}, {P("y1", 2), P("y2", 2)});
    CHECK(check_relations_and_intertwine(k, k, phi).accepted());
    MorphismReport eq = check_hom_constraints(k, k, phi);
    CHECK(eq.structural_rejection.has_value());
    CHECK_FALSE(eq.accepted());
    RandomSource rng(11);
    for (int i = 0; i < 10; ++i) {
      WeylPoly a = rng.poly(2, 2), b = rng.poly(2, 2);
      CHECK(apply_morphism(phi, star(k, a, b)) == star(k, apply_morphism(phi, a), apply_morphism(phi, b)));
    }
  }

  TEST_CASE("round trip and transport") {
    RandomSource rng(12);
    for (int i = 0; i < 10; ++i) {
      TwistVector k = rng.twist(3, TwistPattern::mixed);
      TwistVector k2 = rng.twist(3, TwistPattern::mixed);
      if (k.nonzero_count() != k2.nonzero_count()) continue;
      GeneratorImages phi = build_iso(k, k2), inv = build_inverse_iso(k, k2);
      WeylPoly a = rng.poly(3, 3), b = rng.poly(3, 3);
      CHECK(apply_morphism(inv, apply_morphism(phi, a)) == a);
      CHECK(apply_morphism(phi, star(k, a, b)) == star(k2, apply_morphism(phi, a), apply_morphism(phi, b)));
    }
  }
}
