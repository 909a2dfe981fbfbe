#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hweyl {

// Exact rational coefficient. Values produced by the library are always in
// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or an integer, with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// Parses a comma-separated list of rationals, e.g. "1,0,-3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

// "3/2", "-7", "0".
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);

// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(unsigned long n, unsigned long k);

Integer factorial(unsigned long n);

}  // namespace hweyl
