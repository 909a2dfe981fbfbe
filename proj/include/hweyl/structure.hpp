#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// Inner derivation ad_p(q) = [p, q] in A_n.
WeylPoly ad(const WeylPoly& p, const WeylPoly& q);

// Structural membership test for Der(A_n^k): ad_p is a derivation of A_n^k
// iff every monomial of p that involves some y_i with k_i != 0 is exactly the
// linear monomial y_i.
bool is_hom_derivation(const TwistVector& k, const WeylPoly& p);

// Independent route: ad_p is in Der(A_n^k) iff ad_p(1) = 0 and ad_p commutes
// with alpha_k on the 2n generators. Returns the 2n + 1 defects in the order
// ad_p(1), then g = x_1..x_n, then g = y_1..y_n with ad_p(alpha_k(g)) -
// alpha_k(ad_p(g)).
std::vector<WeylPoly> derivation_defect_on_generators(const TwistVector& k, const WeylPoly& p);

bool all_zero(const std::vector<WeylPoly>& defects);

// One move of the simplicity reduction: either p -> [x_i, p]_* or
// p -> [p, y_j]_*.
struct ReductionStep {
  enum class Kind { left_x, right_y };
  Kind kind;
  std::size_t index;  // 1-based

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

std::string to_string(const ReductionStep& step);

struct Reduction {
  std::vector<ReductionStep> trace;
  Rational scalar;
};

// Shrinks a nonzero p to a nonzero scalar of the ideal it generates in A_n^k.
// First kills the y-degrees (indices ascending) with [x_i, .]_*, then the
// x-degrees with [., y_j]_*. Throws std::invalid_argument on p == 0.
Reduction reduce_to_scalar(const TwistVector& k, const WeylPoly& p);

WeylPoly apply_step(const TwistVector& k, const ReductionStep& step, const WeylPoly& p);
WeylPoly replay_trace(const TwistVector& k, const std::vector<ReductionStep>& trace, const WeylPoly& p);

// p lies in the commuter of A_n^k iff [p, g]_* = 0 for every generator g.
// alpha_k is injective, so this agrees with the classical centralizer of the
// generators, which is the scalars.
bool commuter_probe(const TwistVector& k, const WeylPoly& p);

enum class Nucleus { left, middle, right };

// Associator defects on the finite witness set {1, y_1..y_n} that decides
// nucleus membership:
//   left:   (p*1)*1 - p*(1*1),  (p*1)*y_l - p*(1*y_l)
//   middle: (y_l*p)*1 - y_l*(p*1)
//   right:  (1*1)*p - 1*(1*p),  (y_l*1)*p - y_l*(1*p)
std::vector<WeylPoly> nucleus_witness_defects(const TwistVector& k, const WeylPoly& p, Nucleus which);

bool nucleus_probe(const TwistVector& k, const WeylPoly& p, Nucleus which);

}  // namespace hweyl
