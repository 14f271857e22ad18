#pragma once

#include <map>
#include <vector>

#include "fano/binary_form.hpp"
#include "fano/matrix.hpp"
#include "fano/scalar.hpp"

namespace fano {

using Exponent = std::vector<int>;

/// Sparse homogeneous form in `nvars` variables; every stored exponent vector
/// sums to `degree`. Zero coefficients are never stored.
class MultiForm {
 public:
  MultiForm() : MultiForm(1, 0) {}
  MultiForm(int nvars, int degree);
  static MultiForm variable(int nvars, int index, const Scalar& c = 1);
  static MultiForm constant(int nvars, const Scalar& c);
  /// Linear form sum_i coeffs[i] x_i.
  static MultiForm linear(const Vector& coeffs);

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  MultiForm derivative(int var) const;
  Scalar evaluate(const Vector& x) const;

  /// Linear change of variables x_i = sum_k sub(i, k) y_k, where sub has
  /// nvars rows; the result is a form in sub.cols() variables.
  MultiForm substitute(const ExactMatrix& sub) const;

  /// Coefficients reduced into F_p.
  MultiForm in_field(std::uint32_t p) const;

  MultiForm& operator+=(const MultiForm& rhs);
  MultiForm& operator-=(const MultiForm& rhs);
  MultiForm operator-() const;
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator*(const MultiForm& a, const MultiForm& b);
  friend MultiForm operator*(const Scalar& s, const MultiForm& f);
  friend bool operator==(const MultiForm& a, const MultiForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  int degree_;
  std::map<Exponent, Scalar> terms_;
};

/// All exponent vectors of the given degree in nvars variables, in
/// lexicographically decreasing order (x0^d first).
std::vector<Exponent> monomials(int nvars, int degree);

/// f(s A_0 + t A_1) as a binary form in (s, t) = (t0, t1).
/// Throws DegenerateLineError if the 2 x nvars matrix A has rank below 2.
BinaryForm restrict_to_line(const MultiForm& f, const ExactMatrix& a);

}  // namespace fano
