#pragma once

#include <array>
#include <map>
#include <vector>

#include "fano/binary_form.hpp"
#include "fano/cubic.hpp"
#include "fano/matrix.hpp"

namespace fano {

/// A section of N_{l/Y}: four linear forms n_i with sum n_i q_i = 0.
struct TangentVector {
  Section components;
  friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

enum class SplittingKind { Type1, Type2 };

const char* to_string(SplittingKind kind) noexcept;

/// One summand O(twist) * generator of the normal bundle; the generator is a
/// 4-tuple of forms of degree 1 - twist.
struct Summand {
  int twist;
  Section generator;
};

/// Birkhoff-Grothendieck data for N_{l/Y}.
///
/// Type1: N = O e1 + O e2 + O(1) e3, Type2: N = O(-1) e1 + O(1) e2 + O(1) e3.
struct SplittingData {
  SplittingKind kind;
  std::array<Summand, 3> summands;
  /// h^0(N(j)) for j in [-2, 2].
  std::map<int, int> h0_table;

  /// The generators of H^0(N(-1)): {e3} for Type1, {e2, e3} for Type2.
  std::vector<Section> minus_one_generators() const;
};

/// Matrix of the map (4-tuples of degree j+1 forms) -> degree j+3 forms,
/// n -> sum n_i q_i. Column i*(j+2)+k is the t0^(j+1-k) t1^k coefficient of
/// n_i; row m is the t0^(j+3-m) t1^m coefficient. Empty when j < -1.
ExactMatrix twisted_pairing_matrix(const JacobianRestriction& q, int j);

/// Basis of H^0(N(j)), one 4-tuple per free column of the pairing matrix.
std::vector<Section> twisted_sections(const JacobianRestriction& q, int j);

int twisted_section_dim(const JacobianRestriction& q, int j);
int twisted_section_dim(const CubicFourfold& y, const Line& l, int j);

std::vector<TangentVector> tangent_space_basis(const JacobianRestriction& q);
std::vector<TangentVector> tangent_space_basis(const CubicFourfold& y, const Line& l);

SplittingKind splitting_type(const JacobianRestriction& q);
SplittingKind splitting_type(const CubicFourfold& y, const Line& l);

SplittingData splitting_basis(const JacobianRestriction& q);
SplittingData splitting_basis(const CubicFourfold& y, const Line& l);

/// Jacobian map of (Y, l), failing fast with SingularAlongLineError.
JacobianRestriction smooth_jacobian(const CubicFourfold& y, const Line& l);

/// Scales a section so its first nonzero coefficient (component-major) is 1.
Section make_monic(const Section& s);

/// Coefficient vector of a section, component-major.
Vector flatten(const Section& s);

}  // namespace fano
