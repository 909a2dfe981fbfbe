#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hweyl/rational.hpp"

namespace hweyl {

using Exponent = std::uint32_t;

// Basis element y_1^{a_1} ... y_n^{a_n} x_1^{b_1} ... x_n^{b_n}; the y block is
// always written before the x block.
struct Monomial {
  std::vector<Exponent> y;
  std::vector<Exponent> x;

  Monomial() = default;
  explicit Monomial(std::size_t n) : y(n, 0), x(n, 0) {}
  Monomial(std::vector<Exponent> yexp, std::vector<Exponent> xexp);

  std::size_t dim() const { return y.size(); }
  Exponent total_degree() const;
  Exponent y_degree() const;
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lexicographic order, largest first: higher total degree, then the
// y exponents compared lexicographically, then the x exponents. Iterating a
// polynomial visits terms in the canonical printing order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Degree of a polynomial in one indeterminate. The zero polynomial has degree
// minus infinity, which compares below every finite degree.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(Exponent d) : value_(d) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !value_.has_value(); }
  // Precondition: finite.
  Exponent value() const { return value_.value(); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return (!a.is_minus_infinity()) <=> (!b.is_minus_infinity());
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<Exponent> value_;
};

// Element of the Weyl algebra A_n over the rationals: a finite linear
// combination of normal-ordered monomials. No stored coefficient is zero.
class WeylPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  // The zero polynomial of A_n. Throws DimensionError when n == 0.
  explicit WeylPoly(std::size_t n);

  static WeylPoly constant(std::size_t n, const Rational& c);
  static WeylPoly one(std::size_t n) { return constant(n, 1); }
  // Generators, 1-based index.
  static WeylPoly y(std::size_t n, std::size_t index);
  static WeylPoly x(std::size_t n, std::size_t index);
  static WeylPoly monomial(const Monomial& m, const Rational& c = 1);

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // True for constants, including zero.
  bool is_scalar() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  WeylPoly& operator+=(const WeylPoly& other);
  WeylPoly& operator-=(const WeylPoly& other);
  WeylPoly operator-() const;

  friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
  friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
  // Associative product of A_n.
  friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);
  friend bool operator==(const WeylPoly&, const WeylPoly&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

WeylPoly add(const WeylPoly& p, const WeylPoly& q);
WeylPoly scale(const Rational& c, const WeylPoly& p);

// Normal-ordered product:
//   (y^a x^i)(y^c x^j) = sum_{r <= i} prod_m C(i_m, r_m) (c_m)_{r_m}
//                        y^{a+c-r} x^{i+j-r}
// where (c)_r is the falling factorial, i.e. x^i is commuted past y^c by
// differentiating y^c r times.
WeylPoly mul_assoc(const WeylPoly& p, const WeylPoly& q);

// Product with the monomial y^a x^b on each side; used by hot loops that
// already hold monomials.
void accumulate_monomial_product(const Monomial& left, const Rational& left_coeff,
                                 const Monomial& right, const Rational& right_coeff,
                                 WeylPoly& out);

WeylPoly power(const WeylPoly& p, unsigned e);

// [p, q] = pq - qp in A_n.
WeylPoly commutator(const WeylPoly& p, const WeylPoly& q);

// Formal partial derivatives, 1-based index. Throw IndexError.
WeylPoly partial_y(const WeylPoly& p, std::size_t index);
WeylPoly partial_x(const WeylPoly& p, std::size_t index);

Degree deg_y(const WeylPoly& p, std::size_t index);
Degree deg_x(const WeylPoly& p, std::size_t index);
Degree total_degree(const WeylPoly& p);

// Throws DimensionError unless a.dim() == b.dim().
void require_same_dim(const WeylPoly& a, const WeylPoly& b);
void require_index(std::size_t index, std::size_t n, const char* what);

}  // namespace hweyl
