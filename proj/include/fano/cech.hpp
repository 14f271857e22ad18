#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fano/cubic.hpp"
#include "fano/laurent.hpp"
#include "fano/tangent.hpp"

namespace fano {

/// Cech representative of the extension class of
/// 0 -> N_{l/Y}(-3) -> O(-2)^4 -> O -> 0 on the cover U0 = {t0 != 0},
/// U1 = {t1 != 0}.
///
/// chart0_lift and chart1_lift are local preimages of 1, regular on U0 and
/// U1 respectively; overlap_section = chart0_lift - chart1_lift lies in the
/// kernel of the Jacobian map.
struct CechCocycle {
  LaurentSection overlap_section;
  LaurentSection chart0_lift;
  LaurentSection chart1_lift;
};

/// Throws NoUnitError when the quadrics share a zero.
CechCocycle connecting_sigma(const JacobianRestriction& q);
CechCocycle connecting_sigma(const CubicFourfold& y, const Line& l);

/// sigma written in the splitting frame, sigma = sum f_i e_i on the overlap.
struct SigmaComponents {
  /// f_i, of total degree twist_i - 3.
  std::array<LaurentBivariate, 3> coefficients;
  /// Classes of f_i in H^1(O(twist_i - 3)) (see LaurentBivariate::h1_coordinates).
  std::array<Vector, 3> h1;

  /// Type2: the symmetric form on H^0(O(1)) given by the O(-4) component,
  /// [[x, y], [y, z]] paired via the residue; returns x z - y^2.
  Scalar type2_discriminant() const;
  /// Type1: determinant of the 2 x 2 matrix of the two O(-3) components.
  Scalar type1_determinant() const;
};

/// Solves sigma = sum f_i e_i on the overlap by Cramer's rule on a nonzero
/// 3 x 3 minor, checks the fourth row, and projects each f_i to H^1.
SigmaComponents sigma_splitting_components(const CechCocycle& sigma, const SplittingData& sd);

/// The scalar lambda with det[a, b, c, w] = lambda * sum q_i w_i, computed as
/// det[a, b, c, e_k] / q_k. Uses the first k with q_k != 0 unless `index` is
/// given. Throws InconsistencyError if the division is not exact.
LaurentBivariate wedge_contract(const LaurentSection& a, const LaurentSection& b,
                                const LaurentSection& c, const JacobianRestriction& q,
                                std::optional<std::size_t> index = std::nullopt);

/// alpha(v1, v2) = residue(sigma ^ v1 ^ v2).
Scalar symplectic_form(const JacobianRestriction& q, const CechCocycle& sigma,
                       const Section& v1, const Section& v2);
Scalar symplectic_form(const CubicFourfold& y, const Line& l, const TangentVector& v1,
                       const TangentVector& v2);

struct GramMatrix {
  std::vector<TangentVector> basis;
  ExactMatrix entries;
  std::size_t rank = 0;
  /// Set when the tangent space is not 4-dimensional.
  bool non_generic = false;
};

GramMatrix gram_matrix(const JacobianRestriction& q, const CechCocycle& sigma,
                       std::vector<TangentVector> basis);
/// Evaluates alpha on the tangent_space_basis of (Y, l).
GramMatrix gram_matrix(const CubicFourfold& y, const Line& l);

}  // namespace fano
