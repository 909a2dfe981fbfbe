#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hweyl/rational.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// k in Q^n, parameterizing alpha_k : y_l -> y_l + k_l, x_l -> x_l and the
// hom-associative Weyl algebra A_n^k.
class TwistVector {
 public:
  explicit TwistVector(std::vector<Rational> entries);
  static TwistVector zero(std::size_t n);
  // Comma-separated rationals, e.g. "1,0,-1/2".
  static TwistVector parse(const std::string& text);

  std::size_t dim() const { return k_.size(); }
  // 1-based.
  const Rational& operator[](std::size_t index) const { return k_.at(index - 1); }
  const std::vector<Rational>& entries() const { return k_; }

  bool is_zero() const;
  // 1-based indices l with k_l == 0, ascending.
  std::vector<std::size_t> zero_set() const;
  std::vector<std::size_t> support() const;
  std::size_t nonzero_count() const { return dim() - zero_set().size(); }

  TwistVector scaled(const Rational& c) const;

  friend bool operator==(const TwistVector&, const TwistVector&) = default;

 private:
  std::vector<Rational> k_;
};

std::string to_string(const TwistVector& k);

void require_same_dim(const TwistVector& k, const WeylPoly& p);

// alpha_k(p) by substituting y_l + k_l for every y_l (binomial expansion).
WeylPoly apply_twist(const TwistVector& k, const WeylPoly& p);

// alpha_k(p) as the exponential sum_i (k . d/dy)^i p / i!, which is finite on
// polynomials. Independent of apply_twist.
WeylPoly twist_via_exp(const TwistVector& k, const WeylPoly& p);

// alpha_k^i(p) = alpha_{ik}(p); negative i gives powers of the inverse
// alpha_{-k}.
WeylPoly twist_power(const TwistVector& k, long i, const WeylPoly& p);

// Shift of the single variable y_index by c.
WeylPoly shift_single(std::size_t index, const Rational& c, const WeylPoly& p);

}  // namespace hweyl
