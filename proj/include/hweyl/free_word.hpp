#pragma once

#include <cstddef>
#include <vector>

#include "hweyl/rational.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// A letter of the free algebra on x_1..x_n, y_1..y_n, or a scalar factor.
struct Letter {
  enum class Kind { x, y, scalar };

  Kind kind = Kind::scalar;
  std::size_t index = 0;  // 1-based for x/y, unused for scalars
  Rational value = 1;     // scalars only

  static Letter X(std::size_t i) { return {Kind::x, i, 1}; }
  static Letter Y(std::size_t i) { return {Kind::y, i, 1}; }
  static Letter scalar(const Rational& c) { return {Kind::scalar, 0, c}; }
};

using FreeWord = std::vector<Letter>;

// Normal form of the concatenation w1 w2 in A_n, computed by plain rewriting
// with x_i y_j -> y_j x_i + delta_ij and swaps of commuting letters. Shares no
// code with mul_assoc; it exists to cross-check it.
WeylPoly oracle_mul(std::size_t n, const FreeWord& w1, const FreeWord& w2);

WeylPoly oracle_normal_form(std::size_t n, const FreeWord& w);

// The word y_1^{a_1}..y_n^{a_n} x_1^{b_1}..x_n^{b_n} spelling out a monomial.
FreeWord word_of(const Monomial& m);

}  // namespace hweyl
