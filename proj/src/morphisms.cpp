#include "hweyl/morphisms.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hweyl/errors.hpp"

namespace hweyl {
namespace {

std::string pair_id(const char* name, std::size_t j, std::size_t l) {
  return std::string(name) + "(" + std::to_string(j) + "," + std::to_string(l) + ")";
}

std::string single_id(const char* name, std::size_t l) { return std::string(name) + "(" + std::to_string(l) + ")"; }

void require_pair(const TwistVector& k, const TwistVector& k2) {
  if (k.dim() != k2.dim())
    throw DimensionError("twist vectors have different lengths " + std::to_string(k.dim()) + " and " +
                         std::to_string(k2.dim()));
}

void require_images(const TwistVector& k, const GeneratorImages& phi) {
  if (phi.n != k.dim()) throw DimensionError("generator images and twist vector differ in dimension");
}

}  // namespace

GeneratorImages::GeneratorImages(std::vector<WeylPoly> x, std::vector<WeylPoly> y)
    : n(x.size()), x_img(std::move(x)), y_img(std::move(y)) {
  if (n == 0 || y_img.size() != n) throw DimensionError("need n images for x and n images for y");
  for (const auto& p : x_img)
    if (p.dim() != n) throw DimensionError("generator image has the wrong dimension");
  for (const auto& p : y_img)
    if (p.dim() != n) throw DimensionError("generator image has the wrong dimension");
}

GeneratorImages GeneratorImages::identity(std::size_t n) {
  std::vector<WeylPoly> x, y;
  for (std::size_t l = 1; l <= n; ++l) {
    x.push_back(WeylPoly::x(n, l));
    y.push_back(WeylPoly::y(n, l));
  }
  return GeneratorImages(std::move(x), std::move(y));
}

namespace {

struct IndexMatching {
  std::vector<std::size_t> target;  // target[l-1] = image index of l
};

IndexMatching order_preserving_matching(const TwistVector& k, const TwistVector& k2) {
  require_pair(k, k2);
  auto zero = k.zero_set(), zero2 = k2.zero_set();
  if (zero.size() != zero2.size())
    throw ClassificationError("A_n^k and A_n^k' are not isomorphic: k has " + std::to_string(k.nonzero_count()) +
                              " nonzero entries, k' has " + std::to_string(k2.nonzero_count()));
  auto supp = k.support(), supp2 = k2.support();
  IndexMatching m{std::vector<std::size_t>(k.dim())};
  for (std::size_t i = 0; i < zero.size(); ++i) m.target[zero[i] - 1] = zero2[i];
  for (std::size_t i = 0; i < supp.size(); ++i) m.target[supp[i] - 1] = supp2[i];
  return m;
}

}  // namespace

GeneratorImages build_iso(const TwistVector& k, const TwistVector& k2) {
  const auto match = order_preserving_matching(k, k2);
  const std::size_t n = k.dim();
  std::vector<WeylPoly> x, y;
  for (std::size_t l = 1; l <= n; ++l) {
    std::size_t t = match.target[l - 1];
    if (k[l] == 0) {
      x.push_back(WeylPoly::x(n, t));
      y.push_back(WeylPoly::y(n, t));
    } else {
      x.push_back(scale(k2[t] / k[l], WeylPoly::x(n, t)));
      y.push_back(scale(k[l] / k2[t], WeylPoly::y(n, t)));
    }
  }
  return GeneratorImages(std::move(x), std::move(y));
}

GeneratorImages build_inverse_iso(const TwistVector& k, const TwistVector& k2) {
  const auto match = order_preserving_matching(k, k2);
  const std::size_t n = k.dim();
  std::vector<WeylPoly> x(n, WeylPoly(n)), y(n, WeylPoly(n));
  // phi(x_l) = s x_t  =>  phi'(x_t) = x_l / s, and dually for y.
  for (std::size_t l = 1; l <= n; ++l) {
    std::size_t t = match.target[l - 1];
    if (k[l] == 0) {
      x[t - 1] = WeylPoly::x(n, l);
      y[t - 1] = WeylPoly::y(n, l);
    } else {
      x[t - 1] = scale(k[l] / k2[t], WeylPoly::x(n, l));
      y[t - 1] = scale(k2[t] / k[l], WeylPoly::y(n, l));
    }
  }
  return GeneratorImages(std::move(x), std::move(y));
}

WeylPoly apply_morphism(const GeneratorImages& phi, const WeylPoly& p) {
  if (phi.n != p.dim()) throw DimensionError("morphism and polynomial differ in dimension");
  const std::size_t n = p.dim();
  // Powers of images are reused across monomials.
  std::map<std::pair<std::size_t, Exponent>, WeylPoly> cache;
  auto image_power = [&](std::size_t slot, Exponent e) -> const WeylPoly& {
    auto key = std::make_pair(slot, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const WeylPoly& base = slot < n ? phi.y_img[slot] : phi.x_img[slot - n];
    return cache.emplace(key, power(base, e)).first->second;
  };

  WeylPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    WeylPoly term = WeylPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m.y[i]) term = term * image_power(i, m.y[i]);
    for (std::size_t i = 0; i < n; ++i)
      if (m.x[i]) term = term * image_power(n + i, m.x[i]);
    out += term;
  }
  return out;
}

GeneratorImages compose(const GeneratorImages& outer, const GeneratorImages& inner) {
  if (outer.n != inner.n) throw DimensionError("cannot compose morphisms of different dimension");
  std::vector<WeylPoly> x, y;
  for (const auto& p : inner.x_img) x.push_back(apply_morphism(outer, p));
  for (const auto& p : inner.y_img) y.push_back(apply_morphism(outer, p));
  return GeneratorImages(std::move(x), std::move(y));
}

bool MorphismReport::accepted() const {
  if (structural_rejection) return false;
  return std::all_of(checks.begin(), checks.end(), [](const EquationCheck& c) { return c.passed(); });
}

std::vector<EquationCheck> MorphismReport::failures() const {
  std::vector<EquationCheck> out;
  for (const auto& c : checks)
    if (!c.passed()) out.push_back(c);
  return out;
}

MorphismReport check_relations_and_intertwine(const TwistVector& k, const TwistVector& k2,
                                              const GeneratorImages& phi) {
  require_pair(k, k2);
  require_images(k, phi);
  const std::size_t n = phi.n;
  MorphismReport report;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (j < l) {
        report.checks.push_back({pair_id("rel_xx", j, l), commutator(phi.x_img[j - 1], phi.x_img[l - 1])});
        report.checks.push_back({pair_id("rel_yy", j, l), commutator(phi.y_img[j - 1], phi.y_img[l - 1])});
      }
      WeylPoly xy = commutator(phi.x_img[j - 1], phi.y_img[l - 1]);
      if (j == l) xy -= WeylPoly::one(n);
      report.checks.push_back({pair_id("rel_xy", j, l), std::move(xy)});
    }
  }
  for (std::size_t l = 1; l <= n; ++l) {
    // alpha_k(x_l) = x_l, so phi(alpha_k(x_l)) = phi(x_l).
    report.checks.push_back({single_id("intertwine_x", l), phi.x_img[l - 1] - apply_twist(k2, phi.x_img[l - 1])});
    WeylPoly shifted_y = phi.y_img[l - 1] + WeylPoly::constant(n, k[l]);
    report.checks.push_back({single_id("intertwine_y", l), shifted_y - apply_twist(k2, phi.y_img[l - 1])});
  }
  return report;
}

HomDecomposition decompose_images(const TwistVector& k2, const GeneratorImages& phi) {
  require_images(k2, phi);
  const std::size_t n = phi.n;
  HomDecomposition d;
  d.f.assign(n, std::vector<Rational>(n, 0));
  d.g.assign(n, std::vector<Rational>(n, 0));

  auto split = [&](const WeylPoly& image, std::size_t l, std::vector<std::vector<Rational>>& coeffs,
                   const char* name) {
    WeylPoly rest(n);
    for (const auto& [m, c] : image.terms()) {
      std::size_t shifted = 0;
      for (std::size_t i = 1; i <= n; ++i)
        if (k2[i] != 0 && m.y[i - 1] != 0) shifted = i;
      if (shifted == 0) {
        rest.add_term(m, c);
        continue;
      }
      Monomial linear(n);
      linear.y[shifted - 1] = 1;
      if (m != linear)
        throw StructureError(std::string(name) + "(" + std::to_string(l) + ") contains y" + std::to_string(shifted) +
                             " (shifted by k') other than as a constant-coefficient linear term");
      coeffs[shifted - 1][l - 1] = c;
    }
    return rest;
  };

  for (std::size_t l = 1; l <= n; ++l) {
    d.p.push_back(split(phi.x_img[l - 1], l, d.f, "phi(x)"));
    d.q.push_back(split(phi.y_img[l - 1], l, d.g, "phi(y)"));
  }
  return d;
}

MorphismReport check_hom_constraints(const TwistVector& k, const TwistVector& k2, const GeneratorImages& phi) {
  require_pair(k, k2);
  require_images(k, phi);
  const std::size_t n = phi.n;
  MorphismReport report;
  HomDecomposition d;
  try {
    d = decompose_images(k2, phi);
  } catch (const StructureError& e) {
    report.structural_rejection = e.what();
    return report;
  }

  for (std::size_t l = 1; l <= n; ++l) {
    Rational c1 = 0, c2 = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      c1 += d.f[i - 1][l - 1] * k2[i];
      c2 += d.g[i - 1][l - 1] * k2[i];
    }
    report.checks.push_back({single_id("coeff1", l), WeylPoly::constant(n, c1)});
    report.checks.push_back({single_id("coeff2", l), WeylPoly::constant(n, c2 - k[l])});
  }

  // sum_i d/dx_i (a_il u_j - b_ij v_l)
  auto divergence = [&](const std::vector<std::vector<Rational>>& a, const WeylPoly& u, std::size_t l,
                        const std::vector<std::vector<Rational>>& b, const WeylPoly& v, std::size_t j) {
    WeylPoly s(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational& ai = a[i - 1][l - 1];
      const Rational& bi = b[i - 1][j - 1];
      if (ai != 0) s += scale(ai, partial_x(u, i));
      if (bi != 0) s -= scale(bi, partial_x(v, i));
    }
    return s;
  };

  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t l = 1; l <= n; ++l) {
      const WeylPoly &pj = d.p[j - 1], &pl = d.p[l - 1], &qj = d.q[j - 1], &ql = d.q[l - 1];
      if (j < l) {
        report.checks.push_back({pair_id("pde1", j, l), divergence(d.f, pj, l, d.f, pl, j) - commutator(pl, pj)});
        report.checks.push_back({pair_id("pde2", j, l), divergence(d.g, qj, l, d.g, ql, j) - commutator(ql, qj)});
      }
      WeylPoly pde3 = divergence(d.g, pj, l, d.f, ql, j) - commutator(ql, pj);
      if (j == l) pde3 -= WeylPoly::one(n);
      report.checks.push_back({pair_id("pde3", j, l), std::move(pde3)});
    }
  }
  return report;
}

}  // namespace hweyl
