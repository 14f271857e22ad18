#include "fano/multiform.hpp"

#include <functional>

#include "fano/errors.hpp"

namespace fano {

MultiForm::MultiForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars <= 0) throw GradingError("form needs at least one variable");
}

MultiForm MultiForm::variable(int nvars, int index, const Scalar& c) {
  MultiForm f(nvars, 1);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  f.add_term(e, c);
  return f;
}

MultiForm MultiForm::constant(int nvars, const Scalar& c) {
  MultiForm f(nvars, 0);
  f.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return f;
}

MultiForm MultiForm::linear(const Vector& coeffs) {
  MultiForm f(static_cast<int>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

Scalar MultiForm::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiForm::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw GradingError("exponent length mismatch");
  int sum = 0;
  for (int x : e) {
    if (x < 0) throw GradingError("negative exponent in a form");
    sum += x;
  }
  if (sum != degree_) throw GradingError("inhomogeneous term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiForm MultiForm::derivative(int var) const {
  MultiForm out(nvars_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return out;
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent d = e;
    --d[static_cast<std::size_t>(var)];
    out.add_term(d, Scalar(k) * c);
  }
  return out;
}

Scalar MultiForm::evaluate(const Vector& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw GradingError("point has the wrong arity");
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    }
    total += term;
  }
  return total;
}

MultiForm MultiForm::substitute(const ExactMatrix& sub) const {
  if (static_cast<int>(sub.rows()) != nvars_) throw GradingError("substitution arity mismatch");
  const int m = static_cast<int>(sub.cols());
  std::vector<MultiForm> images;
  images.reserve(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) images.push_back(MultiForm::linear(sub.row(static_cast<std::size_t>(i))));
  // Powers are cached per variable since cubic monomials repeat them.
  std::vector<std::vector<MultiForm>> powers(static_cast<std::size_t>(nvars_));
  auto power = [&](int i, int k) -> const MultiForm& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    if (cache.empty()) cache.push_back(MultiForm::constant(m, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiForm out(m, degree_);
  for (const auto& [e, c] : terms_) {
    MultiForm term = MultiForm::constant(m, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[static_cast<std::size_t>(i)] > 0) term = term * power(i, e[static_cast<std::size_t>(i)]);
    }
    out += term;
  }
  return out;
}

MultiForm MultiForm::in_field(std::uint32_t p) const {
  MultiForm out(nvars_, degree_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.in_field(p));
  return out;
}

MultiForm& MultiForm::operator+=(const MultiForm& rhs) {
  if (rhs.nvars_ != nvars_) throw GradingError("adding forms in different variables");
  if (rhs.degree_ != degree_) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
      degree_ = rhs.degree_;
    } else {
      throw GradingError("adding forms of different degrees");
    }
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& rhs) { return *this += -rhs; }

MultiForm MultiForm::operator-() const {
  MultiForm out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiForm operator*(const MultiForm& a, const MultiForm& b) {
  if (a.nvars_ != b.nvars_) throw GradingError("multiplying forms in different variables");
  MultiForm out(a.nvars_, a.degree_ + b.degree_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiForm operator*(const Scalar& s, const MultiForm& f) {
  MultiForm out(f.nvars_, f.degree_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : f.terms_) out.add_term(e, s * c);
  return out;
}

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

BinaryForm restrict_to_line(const MultiForm& f, const ExactMatrix& a) {
  if (a.rows() != 2 || static_cast<int>(a.cols()) != f.nvars()) {
    throw DegenerateLineError("line parameterization must be 2 x nvars");
  }
  if (rank(a) < 2) throw DegenerateLineError("line parameterization has rank below 2");
  std::vector<BinaryForm> coords;
  coords.reserve(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) coords.emplace_back(1, Vector{a(0, i), a(1, i)});
  BinaryForm out(f.degree());
  for (const auto& [e, c] : f.terms()) {
    BinaryForm term(0, {c});
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * coords[i];
    }
    out += term;
  }
  return out;
}

}  // namespace fano
