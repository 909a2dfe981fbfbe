#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hweyl/twist.hpp"
#include "hweyl/weyl_poly.hpp"

namespace hweyl {

// Candidate morphism given by the images of the generators.
struct GeneratorImages {
  std::size_t n;
  std::vector<WeylPoly> x_img;  // phi(x_1..x_n)
  std::vector<WeylPoly> y_img;  // phi(y_1..y_n)

  GeneratorImages(std::vector<WeylPoly> x, std::vector<WeylPoly> y);
  static GeneratorImages identity(std::size_t n);
};

// phi : A_n^k -> A_n^k2 with phi(x_l) = x_{b(l)}, phi(y_l) = y_{b(l)} on the
// zero set of k, and phi(x_l) = (k2_{b'(l)} / k_l) x_{b'(l)},
// phi(y_l) = (k_l / k2_{b'(l)}) y_{b'(l)} on the support, where b and b' are
// the order-preserving bijections between the zero sets and the supports.
// Throws ClassificationError if k and k2 have different numbers of nonzero
// entries (then no isomorphism exists).
GeneratorImages build_iso(const TwistVector& k, const TwistVector& k2);

// The inverse A_n^k2 -> A_n^k of build_iso(k, k2).
GeneratorImages build_inverse_iso(const TwistVector& k, const TwistVector& k2);

// Multiplicative extension: y^a x^b -> phi(y_1)^{a_1}..phi(y_n)^{a_n}
// phi(x_1)^{b_1}..phi(x_n)^{b_n}, extended linearly.
WeylPoly apply_morphism(const GeneratorImages& phi, const WeylPoly& p);

GeneratorImages compose(const GeneratorImages& outer, const GeneratorImages& inner);

struct EquationCheck {
  std::string id;
  WeylPoly defect;

  bool passed() const { return defect.is_zero(); }
};

struct MorphismReport {
  std::vector<EquationCheck> checks;
  // Set when the images cannot be decomposed into the shape the equation set
  // needs; no equation is evaluated then.
  std::optional<std::string> structural_rejection;

  bool accepted() const;
  std::vector<EquationCheck> failures() const;
};

// Weyl relations [phi x_j, phi x_l] = [phi y_j, phi y_l] = 0,
// [phi x_j, phi y_l] = delta_jl, plus phi(alpha_k(g)) = alpha_k2(phi(g)) on
// every generator. Ids: "rel_xx(j,l)", "rel_yy(j,l)", "rel_xy(j,l)",
// "intertwine_x(l)", "intertwine_y(l)".
MorphismReport check_relations_and_intertwine(const TwistVector& k, const TwistVector& k2,
                                              const GeneratorImages& phi);

// Decomposition phi(x_l) = p_l + sum_i f_il y_i, phi(y_l) = q_l + sum_i g_il y_i
// with p_l, q_l free of every y_i where k2_i != 0.
struct HomDecomposition {
  std::vector<WeylPoly> p, q;
  std::vector<std::vector<Rational>> f, g;  // f[i][l], 0-based
};

// Throws StructureError when some y_i with k2_i != 0 occurs other than as a
// linear term with constant coefficient.
HomDecomposition decompose_images(const TwistVector& k2, const GeneratorImages& phi);

// The equation set on the decomposition:
//   coeff1(l): sum_i f_il k2_i = 0
//   coeff2(l): sum_i g_il k2_i = k_l
//   pde1(j,l): sum_i d/dx_i (f_il p_j - f_ij p_l) - [p_l, p_j] = 0
//   pde2(j,l): sum_i d/dx_i (g_il q_j - g_ij q_l) - [q_l, q_j] = 0
//   pde3(j,l): sum_i d/dx_i (g_il p_j - f_ij q_l) - [q_l, p_j] - delta_jl = 0
MorphismReport check_hom_constraints(const TwistVector& k, const TwistVector& k2, const GeneratorImages& phi);

}  // namespace hweyl
