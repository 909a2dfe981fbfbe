#include "hweyl/homstar.hpp"

namespace hweyl {

WeylPoly star(const TwistVector& k, const WeylPoly& p, const WeylPoly& q) {
  require_same_dim(p, q);
  require_same_dim(k, p);
  return apply_twist(k, p * q);
}

WeylPoly hom_assoc_defect(const TwistVector& k, const WeylPoly& a, const WeylPoly& b, const WeylPoly& c) {
  return star(k, apply_twist(k, a), star(k, b, c)) - star(k, star(k, a, b), apply_twist(k, c));
}

std::pair<WeylPoly, WeylPoly> weak_identity_defect(const TwistVector& k, const WeylPoly& e, const WeylPoly& a) {
  WeylPoly twisted = apply_twist(k, a);
  return {star(k, a, e) - twisted, star(k, e, a) - twisted};
}

std::pair<WeylPoly, WeylPoly> weak_unit_defect(const TwistVector& k, const WeylPoly& a) {
  return weak_identity_defect(k, WeylPoly::one(a.dim()), a);
}

WeylPoly commutator_star(const TwistVector& k, const WeylPoly& p, const WeylPoly& q) {
  return star(k, p, q) - star(k, q, p);
}

WeylPoly associator_star(const TwistVector& k, const WeylPoly& a, const WeylPoly& b, const WeylPoly& c) {
  return star(k, star(k, a, b), c) - star(k, a, star(k, b, c));
}

std::pair<WeylPoly, WeylPoly> hom_lie_defects(const TwistVector& k, const WeylPoly& a, const WeylPoly& b,
                                              const WeylPoly& c) {
  auto bracket = [&](const WeylPoly& p, const WeylPoly& q) { return commutator_star(k, p, q); };
  WeylPoly jacobi = bracket(apply_twist(k, a), bracket(b, c)) + bracket(apply_twist(k, c), bracket(a, b)) +
                    bracket(apply_twist(k, b), bracket(c, a));
  return {bracket(a, a), std::move(jacobi)};
}

}  // namespace hweyl
