#include "fano/univariate.hpp"

#include <algorithm>
#include <utility>

#include "fano/errors.hpp"
#include "fano/matrix.hpp"

namespace fano {

UniPoly::UniPoly(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
  return (k < 0 || k >= static_cast<int>(c_.size())) ? Scalar() : c_[static_cast<std::size_t>(k)];
}

Scalar UniPoly::evaluate(const Scalar& u) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  const Scalar inv = c_.back().inverse();
  Vector out = c_;
  for (auto& x : out) x *= inv;
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  Vector out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  Vector out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  Vector rem = a.coeffs();
  const int db = b.degree();
  const Scalar lead_inv = b.coeffs().back().inverse();
  Vector quot(rem.size() >= b.coeffs().size() ? rem.size() - b.coeffs().size() + 1 : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    const Scalar f = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (f.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UniPoly> unit_combination(const std::vector<UniPoly>& q) {
  UniPoly g;
  int max_deg = -1;
  for (const auto& p : q) {
    g = gcd(g, p);
    max_deg = std::max(max_deg, p.degree());
  }
  if (g.is_zero()) throw NoUnitError("all polynomials vanish identically");
  if (g.degree() > 0) throw NoUnitError("polynomials share a common root");

  const std::size_t n = q.size();
  // Bezout guarantees cofactors of degree below max_deg.
  for (int bound = 0; bound <= std::max(max_deg, 0); ++bound) {
    const std::size_t width = static_cast<std::size_t>(bound) + 1;
    const std::size_t eqs = static_cast<std::size_t>(bound + std::max(max_deg, 0)) + 1;
    ExactMatrix m(eqs, n * width);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < width; ++k) {
        for (int j = 0; j <= q[i].degree(); ++j) {
          m(k + static_cast<std::size_t>(j), i * width + k) = q[i].coeff(j);
        }
      }
    }
    Vector rhs(eqs);
    rhs[0] = 1;
    if (auto x = solve(m, rhs)) {
      std::vector<UniPoly> c;
      c.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        c.emplace_back(Vector(x->begin() + static_cast<std::ptrdiff_t>(i * width),
                              x->begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
      }
      return c;
    }
  }
  throw InconsistencyError("coprime polynomials admit no Bezout cofactors");
}

}  // namespace fano
