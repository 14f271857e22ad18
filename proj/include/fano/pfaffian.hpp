#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fano/cubic.hpp"
#include "fano/matrix.hpp"
#include "fano/multiform.hpp"

namespace fano {

/// 6 x 6 skew-symmetric matrix of linear forms in x0..x4.
class SkewLinearMatrix {
 public:
  /// coeffs[r][c] are the five coefficients of entry (r, c); throws
  /// GradingError unless the matrix is exactly antisymmetric.
  explicit SkewLinearMatrix(const std::array<std::array<Vector, 6>, 6>& coeffs);

  const MultiForm& entry(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const Vector& coefficients(std::size_t r, std::size_t c) const { return coeffs_[r][c]; }

  /// The numeric matrix M(x).
  ExactMatrix evaluate(const Vector& x) const;

  /// Pseudo-random integer coefficients in [-bound, bound] above the
  /// diagonal, deterministic in the seed.
  static SkewLinearMatrix random(std::uint64_t seed, int coeff_bound);

 private:
  std::array<std::array<Vector, 6>, 6> coeffs_;
  std::array<std::array<MultiForm, 6>, 6> entries_;
};

/// Cubic form in x0..x4.
struct CubicThreefold {
  MultiForm form;
};

/// Signed sum over the 15 perfect matchings of {0..5}.
MultiForm pfaffian(const SkewLinearMatrix& m);

/// Substitutes a parameterization of {h = 0}: the last variable with a
/// nonzero coefficient in h is eliminated, the other five become the
/// coordinates of P^4 in their original order.
CubicThreefold restrict_to_hyperplane(const CubicFourfold& y, const Vector& h);

/// Rank of M(x) at each point; throws PointOffVarietyError if X(x) != 0.
std::vector<std::size_t> rank_profile(const SkewLinearMatrix& m, const CubicThreefold& x,
                                      const std::vector<Vector>& points);

/// Kernel of M(x) (two-dimensional where M(x) has rank 4).
std::vector<Vector> kernel_at(const SkewLinearMatrix& m, const Vector& x);

/// Points of X(F_p) in P^4, normalized with first nonzero coordinate 1, in
/// enumeration order, at most `limit`.
std::vector<Vector> points_mod_p(const CubicThreefold& x, std::uint32_t p, std::size_t limit);

struct CohomologyRow {
  /// The row describes H^i(E(1 + d)).
  int d;
  std::array<long long, 5> h{};
  /// 6 C(d+4, 4) - 6 C(d+3, 4) from the resolution.
  long long euler_expected = 0;
  long long euler() const { return h[0] - h[1] + h[2] - h[3] + h[4]; }
  bool euler_ok() const { return euler() == euler_expected; }
};

struct CohomologyTable {
  std::vector<CohomologyRow> rows;
  const CohomologyRow* find(int d) const;
  /// All h^i vanish for d in {-3, -2, -1}, i.e. for E, E(-1), E(-2).
  bool vanishing_band() const;
};

/// Matrix of multiplication by M from S_e^6 to S_{e+1}^6 (monomial bases in
/// the order of `monomials(5, e)`); transposed when `transposed`.
ExactMatrix graded_piece(const SkewLinearMatrix& m, int e, bool transposed = false);

/// Cohomology of the cokernel of 0 -> O(-1)^6 -> O^6 on P^4, twisted by d,
/// for every d in [d_lo, d_hi]. h^0 is the cokernel of S_{d-1}^6 -> S_d^6;
/// h^3 and h^4 are the cokernel and kernel of the Serre-dual map
/// M^T: S_{-d-5}^6 -> S_{-d-4}^6; h^1 = h^2 = 0.
/// Throws DegenerateRepresentationError when Pf(M) = 0.
CohomologyTable graded_cohomology_table(const SkewLinearMatrix& m, int d_lo, int d_hi);

/// Whether the section of E(1) represented by s vanishes at x, i.e.
/// s lies in the image of M(x). Requires X(x) = 0 and rank M(x) = 4.
bool zero_locus_member(const SkewLinearMatrix& m, const Vector& s, const Vector& x);

/// Retries SkewLinearMatrix::random with successive seeds until Pf != 0 and
/// M(x) has rank 4 at the first `probes` points of {Pf = 0} over F_p.
SkewLinearMatrix generic_skew_linear(std::uint64_t seed, int coeff_bound,
                                     std::uint32_t probe_prime = 7, std::size_t probes = 20);

/// Binomial coefficient as a polynomial in n, valid for negative n.
long long binomial_poly(long long n, int k);

}  // namespace fano
