#pragma once

#include <vector>

#include "fano/scalar.hpp"

namespace fano {

/// Dense univariate polynomial, coefficient of u^k at index k; trailing
/// zeros are trimmed so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Vector coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const Vector& coeffs() const noexcept { return c_; }
  Scalar coeff(int k) const;
  Scalar evaluate(const Scalar& u) const;

  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Vector c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Cofactors c with sum c_i q_i = 1.
///
/// The degree bound D of the cofactors is raised from 0 until the linear
/// system on their coefficients becomes solvable; free coefficients are set
/// to zero. Throws NoUnitError when the q_i share a root (or are all zero).
std::vector<UniPoly> unit_combination(const std::vector<UniPoly>& q);

}  // namespace fano
