#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hweyl/deform.hpp"
#include "hweyl/rational.hpp"
#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// Syntax tree of an algebra expression.
//
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := unary (op unary)*     op: '*', U+00B7, juxtaposition (A_n)
//                                        U+229B or '@'          (A_n^k)
//   unary   := '-' unary | power
//   power   := primary ['^' integer]
//   primary := rational | 'x'<i> | 'y'<i> | '(' sum ')'
//
// Rationals are integers or p/q. Both product kinds associate to the left,
// and one product chain may not mix kinds without parentheses.
struct Expr {
  enum class Kind { literal, x, y, add, sub, neg, mul, star, pow };

  Kind kind = Kind::literal;
  Rational value;          // literal
  std::size_t index = 0;   // x, y (1-based)
  unsigned exponent = 0;   // pow
  std::vector<Expr> args;  // operands
};

// Throws ParseError (with byte offset) or IndexError when a generator index
// exceeds n.
Expr parse(std::string_view text, std::size_t n);

// Maps associative products to mul_assoc and star products to star(k, ., .).
WeylPoly eval(const Expr& expr, const TwistVector& k);

WeylPoly parse_poly(std::string_view text, const TwistVector& k);

// Canonical text: terms in graded-lexicographic order (highest first),
// reduced fractions, '1' for the empty monomial, e.g. "y1^2*x1 - 3/2*x2 + 1".
// Parsing the output reproduces the polynomial.
std::string format(const WeylPoly& p);
std::string format(const Monomial& m);

// Same conventions with parameters printed as t1..tm, e.g. "y1*x1 + t1*x1".
std::string format(const ParamPoly& p);

}  // namespace hweyl
