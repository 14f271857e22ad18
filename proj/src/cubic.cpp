#include "fano/cubic.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "fano/errors.hpp"
#include "fano/univariate.hpp"

namespace fano {

namespace {

MultiForm require_cubic(MultiForm f) {
  if (f.nvars() != 6 || f.degree() != 3) {
    throw GradingError("a cubic fourfold needs a degree-3 form in 6 variables");
  }
  return f;
}

// Coefficients of q(1, u) (chart 0) or q(v, 1) (chart 1).
UniPoly chart_polynomial(const BinaryForm& q, int chart) {
  Vector c(q.coeffs().size());
  for (int k = 0; k <= q.degree(); ++k) {
    c[static_cast<std::size_t>(k)] = chart == 0 ? q.coeff(k) : q.coeff(q.degree() - k);
  }
  return UniPoly(std::move(c));
}

Scalar random_coefficient(std::mt19937_64& rng, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  return Scalar(static_cast<long>(rng() % width) - bound);
}

}  // namespace

CubicFourfold::CubicFourfold(MultiForm form)
    : form_(require_cubic(std::move(form))),
      gradient_{form_.derivative(0), form_.derivative(1), form_.derivative(2),
                form_.derivative(3), form_.derivative(4), form_.derivative(5)} {
  MultiForm euler(6, 3);
  for (int i = 0; i < 6; ++i) euler += MultiForm::variable(6, i) * gradient_[static_cast<std::size_t>(i)];
  if (!(euler == Scalar(3) * form_)) throw InconsistencyError("Euler identity fails for gradient");
}

CubicFourfold CubicFourfold::fermat() {
  MultiForm f(6, 3);
  for (int i = 0; i < 6; ++i) {
    Exponent e(6, 0);
    e[static_cast<std::size_t>(i)] = 3;
    f.add_term(e, 1);
  }
  return CubicFourfold(std::move(f));
}

Line::Line(ExactMatrix span, std::array<std::size_t, 2> pivots)
    : span_(std::move(span)), frame_(4, 6), pivots_(pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < 6; ++c) {
    if (c == pivots_[0] || c == pivots_[1]) continue;
    frame_(r++, c) = 1;
  }
}

Line Line::from_matrix(const ExactMatrix& a) {
  if (a.rows() != 2 || a.cols() != 6) throw DegenerateLineError("line matrix must be 2 x 6");
  RowEchelon e = row_reduce(a);
  if (e.rank() < 2) throw DegenerateLineError("line matrix has rank below 2");
  return Line(std::move(e.rref), {e.pivots[0], e.pivots[1]});
}

Line Line::coordinate_line() {
  ExactMatrix a(2, 6);
  a(0, 0) = 1;
  a(1, 1) = 1;
  return from_matrix(a);
}

Line Line::in_field(std::uint32_t p) const {
  ExactMatrix a(2, 6);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 6; ++c) a(r, c) = span_(r, c).in_field(p);
  }
  return from_matrix(a);
}

std::strong_ordering operator<=>(const Line& a, const Line& b) {
  const auto& x = a.span_.entries();
  const auto& y = b.span_.entries();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = order(x[i], y[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t JacobianRestriction::first_nonzero() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!quadrics[i].is_zero()) return i;
  }
  return 4;
}

bool contains_line(const CubicFourfold& y, const ExactMatrix& a) {
  return restrict_to_line(y.form(), a).is_zero();
}

JacobianRestriction jacobian_on_parameterization(const CubicFourfold& y, const ExactMatrix& a,
                                                 const ExactMatrix& frame) {
  if (!contains_line(y, a)) throw LineNotOnCubicError("line does not lie on the cubic");
  if (frame.rows() != 4 || frame.cols() != 6 || rank(a.stacked(frame)) != 6) {
    throw DegenerateLineError("frame does not complete the line to a basis");
  }
  std::array<BinaryForm, 6> grad;
  for (std::size_t j = 0; j < 6; ++j) grad[j] = restrict_to_line(y.gradient()[j], a);
  JacobianRestriction q;
  for (std::size_t i = 0; i < 4; ++i) {
    BinaryForm qi(2);
    for (std::size_t j = 0; j < 6; ++j) {
      if (!frame(i, j).is_zero()) qi += frame(i, j) * grad[j];
    }
    q.quadrics[i] = qi;
  }
  return q;
}

JacobianRestriction jacobian_on_line(const CubicFourfold& y, const Line& l) {
  return jacobian_on_parameterization(y, l.span(), l.frame());
}

bool smooth_along_line(const JacobianRestriction& q) {
  for (int chart = 0; chart < 2; ++chart) {
    UniPoly g;
    for (const auto& qi : q.quadrics) g = gcd(g, chart_polynomial(qi, chart));
    if (g.is_zero() || g.degree() > 0) return false;
  }
  return true;
}

bool smooth_along_line(const CubicFourfold& y, const Line& l) {
  return smooth_along_line(jacobian_on_line(y, l));
}

CubicFourfold cubic_through_line(const Line& l, std::uint64_t seed, int coeff_bound) {
  std::mt19937_64 rng(seed);
  MultiForm adapted(6, 3);
  for (const auto& e : monomials(6, 3)) {
    if (e[2] + e[3] + e[4] + e[5] == 0) continue;
    adapted.add_term(e, random_coefficient(rng, coeff_bound));
  }
  // x = y * chart, so y_k = sum_i x_i (chart^-1)(i, k).
  const auto inv = inverse(l.chart());
  if (!inv) throw InconsistencyError("line chart is not invertible");
  return CubicFourfold(adapted.substitute(inv->transpose()));
}

Line random_line(std::uint64_t seed, int coeff_bound) {
  std::mt19937_64 rng(seed);
  for (;;) {
    ExactMatrix a(2, 6);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 6; ++c) a(r, c) = random_coefficient(rng, coeff_bound);
    }
    if (rank(a) == 2) return Line::from_matrix(a);
  }
}

namespace {

std::vector<Line> lines_with_pivots(const MultiForm& f, std::uint32_t p, std::size_t i,
                                    std::size_t j) {
  std::vector<std::size_t> free0;
  for (std::size_t c = i + 1; c < 6; ++c) {
    if (c != j) free0.push_back(c);
  }
  std::vector<std::size_t> free1;
  for (std::size_t c = j + 1; c < 6; ++c) free1.push_back(c);

  auto count = [p](std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= p;
    return total;
  };
  auto fill = [p](Vector& v, const std::vector<std::size_t>& cols, std::uint64_t code) {
    for (auto c : cols) {
      v[c] = Scalar::modp(static_cast<std::int64_t>(code % p), p);
      code /= p;
    }
  };
  const Scalar zero = Scalar::modp(0, p);
  const Scalar one = Scalar::modp(1, p);

  std::vector<Line> found;
  for (std::uint64_t c0 = 0; c0 < count(free0.size()); ++c0) {
    Vector row0(6, zero);
    row0[i] = one;
    fill(row0, free0, c0);
    if (!f.evaluate(row0).is_zero()) continue;
    for (std::uint64_t c1 = 0; c1 < count(free1.size()); ++c1) {
      Vector row1(6, zero);
      row1[j] = one;
      fill(row1, free1, c1);
      // Necessary conditions first: the cubic must vanish at several points.
      if (!f.evaluate(row1).is_zero()) continue;
      Vector sum(6);
      Vector diff(6);
      for (std::size_t k = 0; k < 6; ++k) {
        sum[k] = row0[k] + row1[k];
        diff[k] = row0[k] - row1[k];
      }
      if (!f.evaluate(sum).is_zero() || !f.evaluate(diff).is_zero()) continue;
      const ExactMatrix a = ExactMatrix::from_rows({row0, row1});
      if (restrict_to_line(f, a).is_zero()) found.push_back(Line::from_matrix(a));
    }
  }
  return found;
}

}  // namespace

std::vector<Line> enumerate_lines_mod_p(const CubicFourfold& y, std::uint32_t p,
                                        std::size_t limit, unsigned workers) {
  require_odd_prime(p);
  const MultiForm f = y.form().in_field(p);
  std::vector<std::pair<std::size_t, std::size_t>> patterns;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) patterns.emplace_back(i, j);
  }
  std::vector<std::vector<Line>> parts(patterns.size());
  workers = std::max(1U, workers);
  if (workers == 1) {
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      parts[k] = lines_with_pivots(f, p, patterns[k].first, patterns[k].second);
    }
  } else {
    for (std::size_t start = 0; start < patterns.size(); start += workers) {
      std::vector<std::future<std::vector<Line>>> jobs;
      const std::size_t stop = std::min(patterns.size(), start + workers);
      for (std::size_t k = start; k < stop; ++k) {
        jobs.push_back(std::async(std::launch::async, lines_with_pivots, std::cref(f), p,
                                  patterns[k].first, patterns[k].second));
      }
      for (std::size_t k = start; k < stop; ++k) parts[k] = jobs[k - start].get();
    }
  }
  std::vector<Line> all;
  for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  if (all.size() > limit) all.erase(all.begin() + static_cast<std::ptrdiff_t>(limit), all.end());
  return all;
}

}  // namespace fano
