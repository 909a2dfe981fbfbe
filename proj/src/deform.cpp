#include "hweyl/deform.hpp"

#include <set>
#include <string>

#include "hweyl/errors.hpp"

namespace hweyl {

ParamMap::ParamMap(std::vector<std::size_t> positions, std::size_t n) : positions_(std::move(positions)), n_(n) {
  std::set<std::size_t> seen;
  for (std::size_t p : positions_) {
    require_index(p, n, "parameter position");
    if (!seen.insert(p).second) throw IndexError("parameter position " + std::to_string(p) + " repeated");
  }
}

ParamMap ParamMap::support_of(const TwistVector& k) { return ParamMap(k.support(), k.dim()); }

TwistVector ParamMap::twist_for(const std::vector<Rational>& values) const {
  if (values.size() != positions_.size())
    throw DimensionError("expected " + std::to_string(positions_.size()) + " parameter values, got " +
                         std::to_string(values.size()));
  std::vector<Rational> k(n_, 0);
  for (std::size_t s = 0; s < values.size(); ++s) k[positions_[s] - 1] = values[s];
  return TwistVector(std::move(k));
}

ParamPoly::ParamPoly(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (n == 0) throw DimensionError("Weyl algebra dimension must be positive");
}

ParamPoly ParamPoly::constant(std::size_t m, const WeylPoly& p) {
  ParamPoly out(m, p.dim());
  out.add_term(MultiIndex(m, 0), p);
  return out;
}

void ParamPoly::add_term(const MultiIndex& index, const WeylPoly& coeff) {
  if (index.size() != m_) throw DimensionError("multi-index length does not match parameter count");
  if (coeff.dim() != n_) throw DimensionError("series coefficient has the wrong dimension");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_shape(const ParamPoly& a, const ParamPoly& b) {
  if (a.params() != b.params() || a.dim() != b.dim()) throw DimensionError("series shapes differ");
}

void require_map(const ParamMap& pm, const WeylPoly& p) {
  if (pm.dim() != p.dim()) throw DimensionError("parameter map and polynomial differ in dimension");
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  require_same_shape(*this, other);
  for (const auto& [i, c] : other.terms_) add_term(i, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  require_same_shape(*this, other);
  for (const auto& [i, c] : other.terms_) add_term(i, -c);
  return *this;
}

WeylPoly order_term(const ParamPoly& series, const MultiIndex& index) {
  if (index.size() != series.params()) throw DimensionError("multi-index length does not match parameter count");
  auto it = series.terms().find(index);
  return it == series.terms().end() ? WeylPoly(series.dim()) : it->second;
}

WeylPoly specialize(const ParamPoly& series, const std::vector<Rational>& values) {
  if (values.size() != series.params())
    throw DimensionError("expected " + std::to_string(series.params()) + " parameter values, got " +
                         std::to_string(values.size()));
  WeylPoly out(series.dim());
  for (const auto& [index, coeff] : series.terms()) {
    Rational w = 1;
    for (std::size_t s = 0; s < index.size(); ++s)
      for (Exponent e = 0; e < index[s]; ++e) w *= values[s];
    out += scale(w, coeff);
  }
  return out;
}

ParamPoly series_twist(const ParamPoly& p, const ParamMap& pm) {
  if (pm.params() != p.params() || pm.dim() != p.dim()) throw DimensionError("parameter map does not fit series");
  // Expand one parameter at a time: t_s^j / j! d^j/dy_{pos(s)}^j.
  ParamPoly cur = p;
  for (std::size_t s = 1; s <= pm.params(); ++s) {
    ParamPoly next(p.params(), p.dim());
    for (const auto& [index, coeff] : cur.terms()) {
      WeylPoly d = coeff;
      MultiIndex shifted = index;
      Integer fact = 1;
      for (Exponent j = 0; !d.is_zero(); ++j) {
        if (j > 0) fact *= j;
        next.add_term(shifted, scale(Rational(1, 1) / Rational(fact), d));
        d = partial_y(d, pm.position(s));
        ++shifted[s - 1];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

ParamPoly deform_twist(const WeylPoly& a, const ParamMap& pm) {
  require_map(pm, a);
  return series_twist(ParamPoly::constant(pm.params(), a), pm);
}

ParamPoly series_mul(const ParamPoly& p, const ParamPoly& q) {
  require_same_shape(p, q);
  ParamPoly out(p.params(), p.dim());
  MultiIndex sum(p.params());
  for (const auto& [i, a] : p.terms()) {
    for (const auto& [j, b] : q.terms()) {
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] = i[s] + j[s];
      out.add_term(sum, a * b);
    }
  }
  return out;
}

ParamPoly series_star(const ParamPoly& p, const ParamPoly& q, const ParamMap& pm) {
  return series_twist(series_mul(p, q), pm);
}

ParamPoly series_bracket(const ParamPoly& p, const ParamPoly& q, const ParamMap& pm) {
  return series_star(p, q, pm) - series_star(q, p, pm);
}

ParamPoly deform_star(const WeylPoly& a, const WeylPoly& b, const ParamMap& pm) {
  require_same_dim(a, b);
  require_map(pm, a);
  return deform_twist(a * b, pm);
}

ParamPoly deform_bracket(const WeylPoly& a, const WeylPoly& b, const ParamMap& pm) {
  require_same_dim(a, b);
  require_map(pm, a);
  return deform_twist(commutator(a, b), pm);
}

ParamPoly series_hom_assoc_defect(const WeylPoly& a, const WeylPoly& b, const WeylPoly& c, const ParamMap& pm) {
  const std::size_t m = pm.params();
  ParamPoly A = ParamPoly::constant(m, a), B = ParamPoly::constant(m, b), C = ParamPoly::constant(m, c);
  return series_star(series_twist(A, pm), series_star(B, C, pm), pm) -
         series_star(series_star(A, B, pm), series_twist(C, pm), pm);
}

std::pair<ParamPoly, ParamPoly> series_hom_lie_defects(const WeylPoly& a, const WeylPoly& b, const WeylPoly& c,
                                                       const ParamMap& pm) {
  const std::size_t m = pm.params();
  ParamPoly A = ParamPoly::constant(m, a), B = ParamPoly::constant(m, b), C = ParamPoly::constant(m, c);
  auto br = [&](const ParamPoly& p, const ParamPoly& q) { return series_bracket(p, q, pm); };
  ParamPoly jacobi = br(series_twist(A, pm), br(B, C)) + br(series_twist(C, pm), br(A, B)) +
                     br(series_twist(B, pm), br(C, A));
  return {br(A, A), std::move(jacobi)};
}

}  // namespace hweyl
