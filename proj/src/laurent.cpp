#include "fano/laurent.hpp"

#include "fano/errors.hpp"
#include "fano/univariate.hpp"

namespace fano {

LaurentBivariate LaurentBivariate::from_form(const BinaryForm& f) {
  LaurentBivariate out(f.degree());
  for (int k = 0; k <= f.degree(); ++k) out.add_term(f.degree() - k, k, f.coeff(k));
  return out;
}

LaurentBivariate LaurentBivariate::monomial(int t0_exp, int t1_exp, const Scalar& c) {
  LaurentBivariate out(t0_exp + t1_exp);
  out.add_term(t0_exp, t1_exp, c);
  return out;
}

Scalar LaurentBivariate::coeff(int t0_exp, int t1_exp) const {
  if (t0_exp + t1_exp != degree_) return {};
  const auto it = terms_.find(t0_exp);
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentBivariate::add_term(int t0_exp, int t1_exp, const Scalar& c) {
  if (t0_exp + t1_exp != degree_) throw GradingError("Laurent term of the wrong total degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t0_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LaurentBivariate::regular_on_chart0() const {
  for (const auto& [i, c] : terms_) {
    if (degree_ - i < 0) return false;
  }
  return true;
}

bool LaurentBivariate::regular_on_chart1() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

Vector LaurentBivariate::h1_coordinates() const {
  const int n = -degree_;
  if (n < 2) return {};
  Vector out(static_cast<std::size_t>(n - 1));
  for (int b = 1; b <= n - 1; ++b) out[static_cast<std::size_t>(b - 1)] = coeff(-(n - b), -b);
  return out;
}

LaurentBivariate LaurentBivariate::h1_part() const {
  LaurentBivariate out(degree_);
  for (const auto& [i, c] : terms_) {
    if (i < 0 && degree_ - i < 0) out.terms_.emplace(i, c);
  }
  return out;
}

std::optional<LaurentBivariate> LaurentBivariate::divide_exact(const LaurentBivariate& d) const {
  if (d.is_zero()) throw FieldError("Laurent division by zero");
  const int q_degree = degree_ - d.degree_;
  if (is_zero()) return LaurentBivariate(q_degree);
  // Work in u = t1/t0: a term t0^i t1^j becomes u^j. Shift both operands so
  // their lowest u-power is 0; the divisor then has a nonzero constant term
  // and the quotient, if Laurent, is an honest polynomial.
  auto to_poly = [](const LaurentBivariate& x, int& low) {
    low = x.degree_ - x.terms_.rbegin()->first;  // smallest t1-exponent
    const int high = x.degree_ - x.terms_.begin()->first;
    Vector c(static_cast<std::size_t>(high - low) + 1);
    for (const auto& [i, v] : x.terms_) c[static_cast<std::size_t>(x.degree_ - i - low)] = v;
    return UniPoly(std::move(c));
  };
  int low_n = 0;
  int low_d = 0;
  const UniPoly num = to_poly(*this, low_n);
  const UniPoly den = to_poly(d, low_d);
  const DivMod qr = divmod(num, den);
  if (!qr.remainder.is_zero()) return std::nullopt;
  LaurentBivariate out(q_degree);
  const int shift = low_n - low_d;
  for (int k = 0; k <= qr.quotient.degree(); ++k) {
    const int j = k + shift;
    out.add_term(q_degree - j, j, qr.quotient.coeff(k));
  }
  return out;
}

LaurentBivariate& LaurentBivariate::operator+=(const LaurentBivariate& rhs) {
  if (rhs.degree_ != degree_) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
      *this = rhs;
      return *this;
    }
    throw GradingError("adding Laurent forms of different total degrees");
  }
  for (const auto& [i, c] : rhs.terms_) add_term(i, degree_ - i, c);
  return *this;
}

LaurentBivariate& LaurentBivariate::operator-=(const LaurentBivariate& rhs) {
  return *this += -rhs;
}

LaurentBivariate LaurentBivariate::operator-() const {
  LaurentBivariate out = *this;
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

LaurentBivariate operator*(const LaurentBivariate& a, const LaurentBivariate& b) {
  LaurentBivariate out(a.degree_ + b.degree_);
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [k, y] : b.terms_) {
      out.add_term(i + k, out.degree_ - i - k, x * y);
    }
  }
  return out;
}

LaurentBivariate operator*(const Scalar& s, const LaurentBivariate& f) {
  LaurentBivariate out(f.degree_);
  if (s.is_zero()) return out;
  for (const auto& [i, c] : f.terms_) out.add_term(i, f.degree_ - i, s * c);
  return out;
}

Scalar residue(const LaurentBivariate& x) {
  if (x.total_degree() != -2) {
    throw GradingError("residue needs total degree -2, got " + std::to_string(x.total_degree()));
  }
  return x.coeff(-1, -1);
}

LaurentSection to_laurent(const Section& s) {
  return {LaurentBivariate::from_form(s[0]), LaurentBivariate::from_form(s[1]),
          LaurentBivariate::from_form(s[2]), LaurentBivariate::from_form(s[3])};
}

LaurentBivariate pairing(const LaurentSection& a, const Section& q) {
  LaurentBivariate out(a[0].total_degree() + q[0].degree());
  for (std::size_t i = 0; i < 4; ++i) out += a[i] * LaurentBivariate::from_form(q[i]);
  return out;
}

}  // namespace fano
