#include "hweyl/random.hpp"

#include <vector>

namespace hweyl {

std::size_t RandomSource::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Rational RandomSource::nonzero_rational() {
  long num = static_cast<long>(uniform(1, 5));
  if (uniform(0, 1)) num = -num;
  Rational q(num, static_cast<unsigned long>(uniform(1, 3)));
  q.canonicalize();
  return q;
}

Monomial RandomSource::monomial(std::size_t n, unsigned max_degree) {
  Monomial m(n);
  std::size_t degree = uniform(0, max_degree);
  for (std::size_t d = 0; d < degree; ++d) {
    std::size_t slot = uniform(0, 2 * n - 1);
    if (slot < n)
      ++m.y[slot];
    else
      ++m.x[slot - n];
  }
  return m;
}

WeylPoly RandomSource::poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  WeylPoly p(n);
  std::size_t terms = uniform(1, max_terms);
  for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(n, max_degree), nonzero_rational());
  return p;
}

WeylPoly RandomSource::nonzero_poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  while (true) {
    WeylPoly p = poly(n, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

TwistVector RandomSource::twist(std::size_t n, TwistPattern pattern) {
  std::vector<Rational> k(n, 0);
  switch (pattern) {
    case TwistPattern::all_zero:
      break;
    case TwistPattern::one_nonzero:
      k[uniform(0, n - 1)] = nonzero_rational();
      break;
    case TwistPattern::all_nonzero:
      for (auto& v : k) v = nonzero_rational();
      break;
    case TwistPattern::mixed:
      for (auto& v : k)
        if (uniform(0, 1)) v = nonzero_rational();
      break;
  }
  return TwistVector(std::move(k));
}

}  // namespace hweyl
