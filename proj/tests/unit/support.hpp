#pragma once

#include <doctest.h>

#include <string>

#include "hweyl/expr.hpp"
#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl::test {

inline TwistVector K(const std::string& csv) { return TwistVector::parse(csv); }

// Parses an associative expression in A_n.
inline WeylPoly P(const std::string& text, std::size_t n = 1) { return parse_poly(text, TwistVector::zero(n)); }

}  // namespace hweyl::test

namespace doctest {
template <>
struct StringMaker<hweyl::WeylPoly> {
  static String convert(const hweyl::WeylPoly& p) { return hweyl::format(p).c_str(); }
};
}  // namespace doctest
