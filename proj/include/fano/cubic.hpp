#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fano/binary_form.hpp"
#include "fano/matrix.hpp"
#include "fano/multiform.hpp"

namespace fano {

/// A cubic form F in x0..x5 with its six partial derivatives.
class CubicFourfold {
 public:
  explicit CubicFourfold(MultiForm form);
  /// x0^3 + ... + x5^3.
  static CubicFourfold fermat();

  const MultiForm& form() const noexcept { return form_; }
  const std::array<MultiForm, 6>& gradient() const noexcept { return gradient_; }

  CubicFourfold in_field(std::uint32_t p) const { return CubicFourfold(form_.in_field(p)); }
  CubicFourfold scaled(const Scalar& s) const { return CubicFourfold(s * form_); }

 private:
  MultiForm form_;
  std::array<MultiForm, 6> gradient_;
};

/// A line in P^5, stored as the reduced row-echelon basis of its 2-dim
/// span together with the standard basis vectors off the pivot columns.
class Line {
 public:
  /// Throws DegenerateLineError if the 2 x 6 matrix has rank below 2.
  static Line from_matrix(const ExactMatrix& a);
  /// x2 = x3 = x4 = x5 = 0.
  static Line coordinate_line();

  const ExactMatrix& span() const noexcept { return span_; }
  const ExactMatrix& frame() const noexcept { return frame_; }
  const std::array<std::size_t, 2>& pivots() const noexcept { return pivots_; }
  /// The invertible 6 x 6 matrix [span; frame].
  ExactMatrix chart() const { return span_.stacked(frame_); }

  Line in_field(std::uint32_t p) const;

  friend bool operator==(const Line& a, const Line& b) { return a.span_ == b.span_; }
  friend std::strong_ordering operator<=>(const Line& a, const Line& b);

 private:
  Line(ExactMatrix span, std::array<std::size_t, 2> pivots);
  ExactMatrix span_;
  ExactMatrix frame_;
  std::array<std::size_t, 2> pivots_{};
};

/// The Jacobian map O(1)^4 -> O(3) along the line in the chosen frame:
/// q_i(s, t) = grad F(s A0 + t A1) . B_i, four binary quadrics.
struct JacobianRestriction {
  Section quadrics;
  /// Index of the first nonzero quadric (4 if all vanish).
  std::size_t first_nonzero() const;
};

bool contains_line(const CubicFourfold& y, const ExactMatrix& a);
inline bool contains_line(const CubicFourfold& y, const Line& l) { return contains_line(y, l.span()); }

/// Throws LineNotOnCubicError if the line is not on Y.
JacobianRestriction jacobian_on_line(const CubicFourfold& y, const Line& l);

/// Same map for an arbitrary parameterization `a` (2 x 6) and complement
/// `frame` (4 x 6) with [a; frame] invertible.
JacobianRestriction jacobian_on_parameterization(const CubicFourfold& y, const ExactMatrix& a,
                                                 const ExactMatrix& frame);

/// True iff the quadrics have no common zero on P^1, tested as a constant
/// gcd of the dehomogenized quadrics on both standard charts.
bool smooth_along_line(const JacobianRestriction& q);
bool smooth_along_line(const CubicFourfold& y, const Line& l);

/// A cubic with pseudo-random integer coefficients in [-bound, bound]
/// containing the given line: in coordinates adapted to [span; frame] every
/// monomial is used except the four that are pure in the line's own
/// coordinates. Deterministic in the seed.
CubicFourfold cubic_through_line(const Line& l, std::uint64_t seed, int coeff_bound);

/// A line spanned by two pseudo-random integer vectors with entries in
/// [-bound, bound], deterministic in the seed.
Line random_line(std::uint64_t seed, int coeff_bound);

/// All lines on Y over F_p, from an enumeration of reduced row-echelon 2 x 6
/// matrices filtered by contains_line, sorted by canonical form and
/// truncated to `limit`. Pivot patterns are split across `workers` threads.
std::vector<Line> enumerate_lines_mod_p(const CubicFourfold& y, std::uint32_t p,
                                        std::size_t limit, unsigned workers = 1);

}  // namespace fano
