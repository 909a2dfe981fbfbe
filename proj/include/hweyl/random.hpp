#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// Which entries of a random twist vector are nonzero.
enum class TwistPattern { all_zero, one_nonzero, all_nonzero, mixed };

// Deterministic generator of random test elements.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Small nonzero rational: numerator in [-5, 5] \ {0}, denominator in [1, 3].
  Rational nonzero_rational();
  Monomial monomial(std::size_t n, unsigned max_degree);
  // Up to max_terms terms of total degree <= max_degree; may be zero.
  WeylPoly poly(std::size_t n, unsigned max_degree, unsigned max_terms = 4);
  WeylPoly nonzero_poly(std::size_t n, unsigned max_degree, unsigned max_terms = 4);
  TwistVector twist(std::size_t n, TwistPattern pattern);

  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hweyl
