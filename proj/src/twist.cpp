#include "hweyl/twist.hpp"

#include "hweyl/errors.hpp"

namespace hweyl {

TwistVector::TwistVector(std::vector<Rational> entries) : k_(std::move(entries)) {
  if (k_.empty()) throw DimensionError("twist vector must have at least one entry");
}

TwistVector TwistVector::zero(std::size_t n) { return TwistVector(std::vector<Rational>(n, 0)); }

TwistVector TwistVector::parse(const std::string& text) { return TwistVector(parse_rational_list(text)); }

bool TwistVector::is_zero() const {
  for (const auto& c : k_)
    if (c != 0) return false;
  return true;
}

std::vector<std::size_t> TwistVector::zero_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] == 0) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> TwistVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] != 0) out.push_back(i + 1);
  return out;
}

TwistVector TwistVector::scaled(const Rational& c) const {
  std::vector<Rational> out = k_;
  for (auto& v : out) v *= c;
  return TwistVector(std::move(out));
}

std::string to_string(const TwistVector& k) {
  std::string s;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    if (i) s += ',';
    s += to_string(k.entries()[i]);
  }
  return s;
}

void require_same_dim(const TwistVector& k, const WeylPoly& p) {
  if (k.dim() != p.dim())
    throw DimensionError("twist vector has length " + std::to_string(k.dim()) + " but the algebra has n = " +
                         std::to_string(p.dim()));
}

WeylPoly apply_twist(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  const std::size_t n = p.dim();
  if (k.is_zero()) return p;

  WeylPoly out(n);
  std::vector<Exponent> lo(n), r(n);
  for (const auto& [m, c] : p.terms()) {
    // (y + k)^a = sum_{r <= a} C(a, r) k^{a-r} y^r over each index; an index
    // with k_i == 0 only contributes r_i = a_i.
    for (std::size_t i = 0; i < n; ++i) lo[i] = k.entries()[i] == 0 ? m.y[i] : 0;
    r = lo;
    Monomial target = m;
    while (true) {
      Rational coeff = c;
      for (std::size_t i = 0; i < n; ++i) {
        Exponent drop = m.y[i] - r[i];
        if (drop == 0) continue;
        const Rational& base = k.entries()[i];
        Rational kpow;
        mpz_pow_ui(kpow.get_num_mpz_t(), base.get_num_mpz_t(), drop);
        mpz_pow_ui(kpow.get_den_mpz_t(), base.get_den_mpz_t(), drop);
        coeff *= kpow * Rational(binomial(m.y[i], r[i]));
      }
      for (std::size_t i = 0; i < n; ++i) target.y[i] = r[i];
      out.add_term(target, coeff);

      std::size_t i = 0;
      while (i < n && r[i] == m.y[i]) {
        r[i] = lo[i];
        ++i;
      }
      if (i == n) break;
      ++r[i];
    }
  }
  return out;
}

WeylPoly twist_via_exp(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  const std::size_t n = p.dim();
  auto derivation = [&](const WeylPoly& q) {
    WeylPoly d(n);
    for (std::size_t l = 1; l <= n; ++l)
      if (k[l] != 0) d += scale(k[l], partial_y(q, l));
    return d;
  };
  WeylPoly result = p;
  WeylPoly term = p;
  for (unsigned long i = 1;; ++i) {
    term = scale(Rational(1, i), derivation(term));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

WeylPoly twist_power(const TwistVector& k, long i, const WeylPoly& p) {
  return apply_twist(k.scaled(Rational(i)), p);
}

WeylPoly shift_single(std::size_t index, const Rational& c, const WeylPoly& p) {
  require_index(index, p.dim(), "y");
  std::vector<Rational> k(p.dim(), 0);
  k[index - 1] = c;
  return apply_twist(TwistVector(std::move(k)), p);
}

}  // namespace hweyl
