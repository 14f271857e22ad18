#pragma once

#include <array>
#include <map>
#include <optional>

#include "fano/binary_form.hpp"
#include "fano/scalar.hpp"

namespace fano {

/// Homogeneous Laurent polynomial in (t0, t1): a section on the chart overlap
/// t0 t1 != 0. Exponents (i, j) satisfy i + j = total_degree, either may be
/// negative; only nonzero coefficients are stored (keyed by i).
class LaurentBivariate {
 public:
  explicit LaurentBivariate(int total_degree = 0) : degree_(total_degree) {}
  static LaurentBivariate from_form(const BinaryForm& f);
  static LaurentBivariate monomial(int t0_exp, int t1_exp, const Scalar& c = 1);

  int total_degree() const noexcept { return degree_; }
  /// Map from the t0-exponent to its coefficient.
  const std::map<int, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coeff(int t0_exp, int t1_exp) const;
  void add_term(int t0_exp, int t1_exp, const Scalar& c);

  /// Regular on U0 = {t0 != 0}: every t1-exponent is nonnegative.
  bool regular_on_chart0() const;
  /// Regular on U1 = {t1 != 0}: every t0-exponent is nonnegative.
  bool regular_on_chart1() const;

  /// Coordinates in the H^1(O(total_degree)) basis t0^-(n-b) t1^-b,
  /// b = 1..n-1 with n = -total_degree; empty when total_degree > -2.
  Vector h1_coordinates() const;
  /// The part spanned by the H^1 monomials (both exponents negative).
  LaurentBivariate h1_part() const;

  /// Exact quotient by a nonzero Laurent polynomial, nullopt if it does not
  /// divide.
  std::optional<LaurentBivariate> divide_exact(const LaurentBivariate& d) const;

  LaurentBivariate& operator+=(const LaurentBivariate& rhs);
  LaurentBivariate& operator-=(const LaurentBivariate& rhs);
  LaurentBivariate operator-() const;
  friend LaurentBivariate operator+(LaurentBivariate a, const LaurentBivariate& b) { return a += b; }
  friend LaurentBivariate operator-(LaurentBivariate a, const LaurentBivariate& b) { return a -= b; }
  friend LaurentBivariate operator*(const LaurentBivariate& a, const LaurentBivariate& b);
  friend LaurentBivariate operator*(const Scalar& s, const LaurentBivariate& f);
  friend bool operator==(const LaurentBivariate& a, const LaurentBivariate& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<int, Scalar> terms_;
};

/// Serre-duality trace H^1(P^1, O(-2)) -> k: the coefficient of t0^-1 t1^-1.
Scalar residue(const LaurentBivariate& x);

using LaurentSection = std::array<LaurentBivariate, 4>;

LaurentSection to_laurent(const Section& s);
/// Sum of componentwise products with the quadrics (the Jacobian map).
LaurentBivariate pairing(const LaurentSection& a, const Section& q);

}  // namespace fano
