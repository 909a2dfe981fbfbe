#include "hweyl/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "hweyl/homstar.hpp"

namespace hweyl {

WeylPoly ad(const WeylPoly& p, const WeylPoly& q) { return commutator(p, q); }

bool is_hom_derivation(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 1; i <= p.dim(); ++i) {
      if (k[i] == 0 || m.y[i - 1] == 0) continue;
      Monomial linear(p.dim());
      linear.y[i - 1] = 1;
      if (m != linear) return false;
    }
  }
  return true;
}

std::vector<WeylPoly> derivation_defect_on_generators(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  const std::size_t n = p.dim();
  std::vector<WeylPoly> defects;
  defects.reserve(2 * n + 1);
  defects.push_back(ad(p, WeylPoly::one(n)));
  auto intertwine = [&](const WeylPoly& g) { return ad(p, apply_twist(k, g)) - apply_twist(k, ad(p, g)); };
  for (std::size_t l = 1; l <= n; ++l) defects.push_back(intertwine(WeylPoly::x(n, l)));
  for (std::size_t l = 1; l <= n; ++l) defects.push_back(intertwine(WeylPoly::y(n, l)));
  return defects;
}

bool all_zero(const std::vector<WeylPoly>& defects) {
  return std::all_of(defects.begin(), defects.end(), [](const WeylPoly& d) { return d.is_zero(); });
}

std::string to_string(const ReductionStep& step) {
  return step.kind == ReductionStep::Kind::left_x ? "[x" + std::to_string(step.index) + ",.]"
                                                  : "[.,y" + std::to_string(step.index) + "]";
}

WeylPoly apply_step(const TwistVector& k, const ReductionStep& step, const WeylPoly& p) {
  const std::size_t n = p.dim();
  if (step.kind == ReductionStep::Kind::left_x) return commutator_star(k, WeylPoly::x(n, step.index), p);
  return commutator_star(k, p, WeylPoly::y(n, step.index));
}

WeylPoly replay_trace(const TwistVector& k, const std::vector<ReductionStep>& trace, const WeylPoly& p) {
  WeylPoly cur = p;
  for (const auto& step : trace) cur = apply_step(k, step, cur);
  return cur;
}

Reduction reduce_to_scalar(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  if (p.is_zero()) throw std::invalid_argument("reduce_to_scalar: input must be nonzero");
  const std::size_t n = p.dim();
  Reduction out;
  WeylPoly cur = p;
  // [x_i, p]_* = d/dy_i alpha_k(p) lowers deg_{y_i} by one.
  for (std::size_t i = 1; i <= n; ++i) {
    while (deg_y(cur, i) > Degree(0)) {
      ReductionStep step{ReductionStep::Kind::left_x, i};
      cur = apply_step(k, step, cur);
      out.trace.push_back(step);
    }
  }
  // cur is a polynomial in x only; [cur, y_j]_* = d/dx_j cur.
  for (std::size_t j = 1; j <= n; ++j) {
    while (deg_x(cur, j) > Degree(0)) {
      ReductionStep step{ReductionStep::Kind::right_y, j};
      cur = apply_step(k, step, cur);
      out.trace.push_back(step);
    }
  }
  out.scalar = cur.constant_term();
  return out;
}

bool commuter_probe(const TwistVector& k, const WeylPoly& p) {
  require_same_dim(k, p);
  const std::size_t n = p.dim();
  for (std::size_t l = 1; l <= n; ++l) {
    if (!commutator_star(k, p, WeylPoly::x(n, l)).is_zero()) return false;
    if (!commutator_star(k, p, WeylPoly::y(n, l)).is_zero()) return false;
  }
  return true;
}

std::vector<WeylPoly> nucleus_witness_defects(const TwistVector& k, const WeylPoly& p, Nucleus which) {
  require_same_dim(k, p);
  const std::size_t n = p.dim();
  const WeylPoly one = WeylPoly::one(n);
  std::vector<WeylPoly> out;
  switch (which) {
    case Nucleus::left:
      out.push_back(associator_star(k, p, one, one));
      for (std::size_t l = 1; l <= n; ++l) out.push_back(associator_star(k, p, one, WeylPoly::y(n, l)));
      break;
    case Nucleus::middle:
      for (std::size_t l = 1; l <= n; ++l) out.push_back(associator_star(k, WeylPoly::y(n, l), p, one));
      break;
    case Nucleus::right:
      out.push_back(associator_star(k, one, one, p));
      for (std::size_t l = 1; l <= n; ++l) out.push_back(associator_star(k, WeylPoly::y(n, l), one, p));
      break;
  }
  return out;
}

bool nucleus_probe(const TwistVector& k, const WeylPoly& p, Nucleus which) {
  return all_zero(nucleus_witness_defects(k, p, which));
}

}  // namespace hweyl
