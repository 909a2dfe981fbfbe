#include "hweyl/weyl_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "hweyl/errors.hpp"

namespace hweyl {

Monomial::Monomial(std::vector<Exponent> yexp, std::vector<Exponent> xexp)
    : y(std::move(yexp)), x(std::move(xexp)) {
  if (y.size() != x.size()) throw DimensionError("monomial y and x blocks differ in length");
}

Exponent Monomial::total_degree() const {
  return std::accumulate(y.begin(), y.end(), Exponent{0}) + std::accumulate(x.begin(), x.end(), Exponent{0});
}

Exponent Monomial::y_degree() const { return std::accumulate(y.begin(), y.end(), Exponent{0}); }

bool Monomial::is_one() const {
  return std::all_of(y.begin(), y.end(), [](Exponent e) { return e == 0; }) &&
         std::all_of(x.begin(), x.end(), [](Exponent e) { return e == 0; });
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  Exponent da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  if (a.y != b.y) return a.y > b.y;
  return a.x > b.x;
}

void require_same_dim(const WeylPoly& a, const WeylPoly& b) {
  if (a.dim() != b.dim())
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

void require_index(std::size_t index, std::size_t n, const char* what) {
  if (index < 1 || index > n)
    throw IndexError(std::string(what) + " index " + std::to_string(index) + " outside 1.." + std::to_string(n));
}

WeylPoly::WeylPoly(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("Weyl algebra dimension must be positive");
}

WeylPoly WeylPoly::constant(std::size_t n, const Rational& c) {
  WeylPoly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

WeylPoly WeylPoly::y(std::size_t n, std::size_t index) {
  require_index(index, n, "y");
  Monomial m(n);
  m.y[index - 1] = 1;
  return monomial(m);
}

WeylPoly WeylPoly::x(std::size_t n, std::size_t index) {
  require_index(index, n, "x");
  Monomial m(n);
  m.x[index - 1] = 1;
  return monomial(m);
}

WeylPoly WeylPoly::monomial(const Monomial& m, const Rational& c) {
  WeylPoly p(m.dim());
  p.add_term(m, c);
  return p;
}

bool WeylPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational WeylPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational WeylPoly::constant_term() const { return coefficient(Monomial(n_)); }

void WeylPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.dim() != n_) throw DimensionError("monomial dimension does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& other) {
  require_same_dim(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& other) {
  require_same_dim(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeylPoly WeylPoly::operator-() const { return scale(-1, *this); }

WeylPoly add(const WeylPoly& p, const WeylPoly& q) { return p + q; }

WeylPoly scale(const Rational& c, const WeylPoly& p) {
  WeylPoly out(p.dim());
  if (c == 0) return out;
  for (const auto& [m, coeff] : p.terms()) out.add_term(m, c * coeff);
  return out;
}

void accumulate_monomial_product(const Monomial& left, const Rational& left_coeff, const Monomial& right,
                                 const Rational& right_coeff, WeylPoly& out) {
  const std::size_t n = left.dim();
  // Per-index ranges of the number r_m of contractions between x_m^{i_m}
  // (from the left) and y_m^{c_m} (from the right).
  std::vector<Exponent> bound(n);
  for (std::size_t m = 0; m < n; ++m) bound[m] = std::min(left.x[m], right.y[m]);

  std::vector<Exponent> r(n, 0);
  Monomial result(n);
  const Rational base = left_coeff * right_coeff;
  while (true) {
    Integer weight = 1;
    for (std::size_t m = 0; m < n; ++m) {
      if (r[m] == 0) continue;
      weight *= binomial(left.x[m], r[m]);
      weight *= falling_factorial(right.y[m], r[m]);
    }
    for (std::size_t m = 0; m < n; ++m) {
      result.y[m] = left.y[m] + right.y[m] - r[m];
      result.x[m] = left.x[m] + right.x[m] - r[m];
    }
    out.add_term(result, base * Rational(weight));

    std::size_t m = 0;
    while (m < n && r[m] == bound[m]) r[m++] = 0;
    if (m == n) break;
    ++r[m];
  }
}

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
  require_same_dim(a, b);
  WeylPoly out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate_monomial_product(ma, ca, mb, cb, out);
  return out;
}

WeylPoly mul_assoc(const WeylPoly& p, const WeylPoly& q) { return p * q; }

WeylPoly power(const WeylPoly& p, unsigned e) {
  WeylPoly result = WeylPoly::one(p.dim());
  WeylPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

WeylPoly commutator(const WeylPoly& p, const WeylPoly& q) { return p * q - q * p; }

WeylPoly partial_y(const WeylPoly& p, std::size_t index) {
  require_index(index, p.dim(), "y");
  WeylPoly out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    Exponent e = m.y[index - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.y[index - 1] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

WeylPoly partial_x(const WeylPoly& p, std::size_t index) {
  require_index(index, p.dim(), "x");
  WeylPoly out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    Exponent e = m.x[index - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.x[index - 1] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

namespace {

template <class Key>
Degree max_degree(const WeylPoly& p, Key key) {
  Degree best = Degree::minus_infinity();
  for (const auto& [m, c] : p.terms()) best = std::max(best, Degree(key(m)));
  return best;
}

}  // namespace

Degree deg_y(const WeylPoly& p, std::size_t index) {
  require_index(index, p.dim(), "y");
  return max_degree(p, [&](const Monomial& m) { return m.y[index - 1]; });
}

Degree deg_x(const WeylPoly& p, std::size_t index) {
  require_index(index, p.dim(), "x");
  return max_degree(p, [&](const Monomial& m) { return m.x[index - 1]; });
}

Degree total_degree(const WeylPoly& p) {
  return max_degree(p, [](const Monomial& m) { return m.total_degree(); });
}

}  // namespace hweyl
