#include "fano/binary_form.hpp"

#include <stdexcept>
#include <utility>

#include "fano/errors.hpp"

namespace fano {

BinaryForm::BinaryForm(int degree) : degree_(degree) {
  if (degree < 0) throw GradingError("binary form of negative degree");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm::BinaryForm(int degree, Vector coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw GradingError("binary form coefficient count must be degree + 1");
  }
}

BinaryForm BinaryForm::monomial(int t0_exp, int t1_exp, const Scalar& c) {
  BinaryForm f(t0_exp + t1_exp);
  f.set_coeff(t1_exp, c);
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Scalar BinaryForm::evaluate(const Scalar& t0, const Scalar& t1) const {
  // Horner in t1/t0 after homogenizing: sum_k c_k t0^(d-k) t1^k.
  Scalar result;
  Scalar t0_pow = 1;
  Vector t0_powers(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    t0_powers[k] = t0_pow;
    t0_pow *= t0;
  }
  Scalar t1_pow = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    result += coeffs_[k] * t0_powers[coeffs_.size() - 1 - k] * t1_pow;
    t1_pow *= t1;
  }
  return result;
}

BinaryForm BinaryForm::substitute(const std::array<std::array<Scalar, 2>, 2>& g) const {
  const BinaryForm new_t0(1, {g[0][0], g[1][0]});
  const BinaryForm new_t1(1, {g[0][1], g[1][1]});
  BinaryForm out(degree_);
  for (int k = 0; k <= degree_; ++k) {
    if (coeff(k).is_zero()) continue;
    BinaryForm term(0, {coeff(k)});
    for (int i = 0; i < degree_ - k; ++i) term = term * new_t0;
    for (int i = 0; i < k; ++i) term = term * new_t1;
    out += term;
  }
  return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& rhs) {
  if (rhs.degree_ != degree_) throw GradingError("adding binary forms of different degrees");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& rhs) { return *this += -rhs; }

BinaryForm BinaryForm::operator-() const {
  BinaryForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

BinaryForm operator*(const Scalar& s, BinaryForm f) {
  for (auto& c : f.coeffs_) c *= s;
  return f;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

BinaryForm pairing(const Section& a, const Section& b) {
  BinaryForm out = a[0] * b[0];
  for (std::size_t i = 1; i < 4; ++i) out += a[i] * b[i];
  return out;
}

bool is_zero(const Section& s) {
  for (const auto& f : s) {
    if (!f.is_zero()) return false;
  }
  return true;
}

Section scaled(const Scalar& c, const Section& s) {
  return {c * s[0], c * s[1], c * s[2], c * s[3]};
}

Section operator+(const Section& a, const Section& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Section times(const BinaryForm& f, const Section& s) {
  return {f * s[0], f * s[1], f * s[2], f * s[3]};
}

}  // namespace fano
