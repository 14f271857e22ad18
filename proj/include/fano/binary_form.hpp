#pragma once

#include <array>
#include <vector>

#include "fano/scalar.hpp"

namespace fano {

/// Homogeneous form in (t0, t1): coeffs[k] multiplies t0^(d-k) t1^k.
///
/// The zero form keeps its nominal degree so graded bookkeeping stays total.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  explicit BinaryForm(int degree);
  BinaryForm(int degree, Vector coeffs);
  static BinaryForm monomial(int t0_exp, int t1_exp, const Scalar& c = 1);

  int degree() const noexcept { return degree_; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  const Scalar& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  void set_coeff(int k, const Scalar& c) { coeffs_.at(static_cast<std::size_t>(k)) = c; }
  bool is_zero() const;

  Scalar evaluate(const Scalar& t0, const Scalar& t1) const;

  /// f((t0, t1) * g), i.e. t0 -> g00 t0 + g10 t1, t1 -> g01 t0 + g11 t1.
  BinaryForm substitute(const std::array<std::array<Scalar, 2>, 2>& g) const;

  BinaryForm& operator+=(const BinaryForm& rhs);
  BinaryForm& operator-=(const BinaryForm& rhs);
  BinaryForm operator-() const;
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Scalar& s, BinaryForm f);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

 private:
  int degree_;
  Vector coeffs_;
};

/// Four binary forms of a common degree: a section of O(d)^4 on the line.
using Section = std::array<BinaryForm, 4>;

/// Sum of componentwise products a_i * b_i.
BinaryForm pairing(const Section& a, const Section& b);
bool is_zero(const Section& s);
Section scaled(const Scalar& c, const Section& s);
Section operator+(const Section& a, const Section& b);
Section times(const BinaryForm& f, const Section& s);

}  // namespace fano
