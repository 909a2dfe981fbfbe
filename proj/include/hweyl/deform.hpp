#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

using MultiIndex = std::vector<Exponent>;

// Attaches formal parameter t_s (s = 1..m) to the variable y_{positions[s-1]}.
class ParamMap {
 public:
  // Throws IndexError for out-of-range or repeated positions.
  ParamMap(std::vector<std::size_t> positions, std::size_t n);
  // One parameter per nonzero entry of k, in ascending index order.
  static ParamMap support_of(const TwistVector& k);

  std::size_t params() const { return positions_.size(); }
  std::size_t dim() const { return n_; }
  // 1-based slot -> 1-based y index.
  std::size_t position(std::size_t slot) const { return positions_.at(slot - 1); }
  const std::vector<std::size_t>& positions() const { return positions_; }

  // k with values[s] at positions[s] and zeros elsewhere.
  TwistVector twist_for(const std::vector<Rational>& values) const;

 private:
  std::vector<std::size_t> positions_;
  std::size_t n_;
};

// Polynomial in t_1..t_m with coefficients in A_n. No stored coefficient is
// zero.
class ParamPoly {
 public:
  using TermMap = std::map<MultiIndex, WeylPoly>;

  ParamPoly(std::size_t m, std::size_t n);
  static ParamPoly constant(std::size_t m, const WeylPoly& p);

  std::size_t params() const { return m_; }
  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& index, const WeylPoly& coeff);

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  std::size_t m_, n_;
  TermMap terms_;
};

// Coefficient of t^index; zero polynomial if absent. Throws DimensionError on
// a multi-index of the wrong length.
WeylPoly order_term(const ParamPoly& series, const MultiIndex& index);

// Substitutes t_s = values[s-1].
WeylPoly specialize(const ParamPoly& series, const std::vector<Rational>& values);

// e^{t . d/dy} a = sum_j t^j / j! (d/dy)^j a over the mapped positions.
ParamPoly deform_twist(const WeylPoly& a, const ParamMap& pm);

// a *_t b = e^{t . d/dy}(ab)
ParamPoly deform_star(const WeylPoly& a, const WeylPoly& b, const ParamMap& pm);

// e^{t . d/dy}[a, b]
ParamPoly deform_bracket(const WeylPoly& a, const WeylPoly& b, const ParamMap& pm);

// Extensions to series arguments, linear over Q[t].
ParamPoly series_mul(const ParamPoly& p, const ParamPoly& q);
ParamPoly series_twist(const ParamPoly& p, const ParamMap& pm);
ParamPoly series_star(const ParamPoly& p, const ParamPoly& q, const ParamMap& pm);
ParamPoly series_bracket(const ParamPoly& p, const ParamPoly& q, const ParamMap& pm);

// alpha_t(a) *_t (b *_t c) - (a *_t b) *_t alpha_t(c), as a series.
ParamPoly series_hom_assoc_defect(const WeylPoly& a, const WeylPoly& b, const WeylPoly& c, const ParamMap& pm);

// Alternativity and hom-Jacobi defects of the deformed bracket.
std::pair<ParamPoly, ParamPoly> series_hom_lie_defects(const WeylPoly& a, const WeylPoly& b, const WeylPoly& c,
                                                       const ParamMap& pm);

}  // namespace hweyl
