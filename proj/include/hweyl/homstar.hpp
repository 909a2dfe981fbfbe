#pragma once

#include <utility>

#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// Multiplication of A_n^k: p * q = alpha_k(pq).
WeylPoly star(const TwistVector& k, const WeylPoly& p, const WeylPoly& q);

// alpha_k(a) * (b * c) - (a * b) * alpha_k(c). Always zero.
WeylPoly hom_assoc_defect(const TwistVector& k, const WeylPoly& a, const WeylPoly& b, const WeylPoly& c);

// (a * 1 - alpha_k(a), 1 * a - alpha_k(a)). Both components are always zero.
std::pair<WeylPoly, WeylPoly> weak_unit_defect(const TwistVector& k, const WeylPoly& a);

// Same equations with an arbitrary candidate e in place of 1.
std::pair<WeylPoly, WeylPoly> weak_identity_defect(const TwistVector& k, const WeylPoly& e, const WeylPoly& a);

// p * q - q * p
WeylPoly commutator_star(const TwistVector& k, const WeylPoly& p, const WeylPoly& q);

// (a * b) * c - a * (b * c)
WeylPoly associator_star(const TwistVector& k, const WeylPoly& a, const WeylPoly& b, const WeylPoly& c);

// ([a, a]_*, [alpha(a), [b, c]_*]_* + [alpha(c), [a, b]_*]_* + [alpha(b), [c, a]_*]_*):
// the alternativity and hom-Jacobi defects of the star commutator.
std::pair<WeylPoly, WeylPoly> hom_lie_defects(const TwistVector& k, const WeylPoly& a, const WeylPoly& b,
                                              const WeylPoly& c);

}  // namespace hweyl
