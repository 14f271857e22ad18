#include "fano/cech.hpp"

#include "fano/errors.hpp"
#include "fano/univariate.hpp"

namespace fano {

namespace {

using Laurent3 = std::array<std::array<LaurentBivariate, 3>, 3>;

LaurentBivariate det3(const Laurent3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Lift of 1 through the Jacobian map on one chart, rehomogenized to degree
// -deg(q): on U0 a cofactor u^k becomes t0^(-d-k) t1^k, on U1 it becomes
// t0^k t1^(-d-k).
LaurentSection chart_lift(const JacobianRestriction& q, int chart) {
  const int d = q.quadrics[0].degree();
  std::vector<UniPoly> polys;
  for (const auto& qi : q.quadrics) {
    Vector c(qi.coeffs().size());
    for (int k = 0; k <= d; ++k) {
      c[static_cast<std::size_t>(k)] = chart == 0 ? qi.coeff(k) : qi.coeff(d - k);
    }
    polys.emplace_back(std::move(c));
  }
  const auto cof = unit_combination(polys);
  LaurentSection lift{LaurentBivariate(-d), LaurentBivariate(-d), LaurentBivariate(-d),
                      LaurentBivariate(-d)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (int k = 0; k <= cof[i].degree(); ++k) {
      if (chart == 0) {
        lift[i].add_term(-d - k, k, cof[i].coeff(k));
      } else {
        lift[i].add_term(k, -d - k, cof[i].coeff(k));
      }
    }
  }
  return lift;
}

bool is_one(const LaurentBivariate& x) {
  return x.total_degree() == 0 && x.terms().size() == 1 && x.coeff(0, 0).is_one();
}

}  // namespace

CechCocycle connecting_sigma(const JacobianRestriction& q) {
  CechCocycle out;
  out.chart0_lift = chart_lift(q, 0);
  out.chart1_lift = chart_lift(q, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    out.overlap_section[i] = out.chart0_lift[i] - out.chart1_lift[i];
  }
  if (!is_one(pairing(out.chart0_lift, q.quadrics)) ||
      !is_one(pairing(out.chart1_lift, q.quadrics)) ||
      !pairing(out.overlap_section, q.quadrics).is_zero()) {
    throw InconsistencyError("chart lifts do not map to 1");
  }
  return out;
}

CechCocycle connecting_sigma(const CubicFourfold& y, const Line& l) {
  return connecting_sigma(smooth_jacobian(y, l));
}

Scalar SigmaComponents::type2_discriminant() const {
  const Vector& s = h1[0];
  if (s.size() != 3) throw InconsistencyError("O(-4) component expected");
  return s[0] * s[2] - s[1] * s[1];
}

Scalar SigmaComponents::type1_determinant() const {
  if (h1[0].size() != 2 || h1[1].size() != 2) throw InconsistencyError("O(-3) components expected");
  return h1[0][0] * h1[1][1] - h1[0][1] * h1[1][0];
}

SigmaComponents sigma_splitting_components(const CechCocycle& sigma, const SplittingData& sd) {
  const LaurentSection& s = sigma.overlap_section;
  std::array<LaurentSection, 3> e;
  for (std::size_t i = 0; i < 3; ++i) e[i] = to_laurent(sd.summands[i].generator);

  static constexpr std::array<std::array<std::size_t, 3>, 4> kRowTriples{
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (const auto& rows : kRowTriples) {
    Laurent3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) m[r][c] = e[c][rows[r]];
    }
    const LaurentBivariate delta = det3(m);
    if (delta.is_zero()) continue;

    SigmaComponents out;
    for (std::size_t c = 0; c < 3; ++c) {
      Laurent3 mc = m;
      for (std::size_t r = 0; r < 3; ++r) mc[r][c] = s[rows[r]];
      auto f = det3(mc).divide_exact(delta);
      if (!f) throw InconsistencyError("splitting coefficient is not a Laurent polynomial");
      out.coefficients[c] = std::move(*f);
    }
    for (std::size_t r = 0; r < 4; ++r) {
      LaurentBivariate recombined(s[r].total_degree());
      for (std::size_t c = 0; c < 3; ++c) recombined += out.coefficients[c] * e[c][r];
      if (!(recombined == s[r])) throw InconsistencyError("splitting does not reproduce sigma");
    }
    for (std::size_t c = 0; c < 3; ++c) {
      out.h1[c] = out.coefficients[c].h1_coordinates();
    }
    return out;
  }
  throw InconsistencyError("splitting generators do not frame the normal bundle");
}

LaurentBivariate wedge_contract(const LaurentSection& a, const LaurentSection& b,
                                const LaurentSection& c, const JacobianRestriction& q,
                                std::optional<std::size_t> index) {
  const std::size_t k = index.value_or(q.first_nonzero());
  if (k >= 4 || q.quadrics[k].is_zero()) {
    throw InconsistencyError("contraction index must point at a nonzero quadric");
  }
  // Expand det[a, b, c, e_k] along its last column: sign (-1)^(k+3) times
  // the minor on the remaining rows.
  Laurent3 minor;
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) continue;
    minor[r] = {a[i], b[i], c[i]};
    ++r;
  }
  LaurentBivariate det = det3(minor);
  if ((k + 3) % 2 == 1) det = -det;
  auto lambda = det.divide_exact(LaurentBivariate::from_form(q.quadrics[k]));
  if (!lambda) throw InconsistencyError("wedge contraction is not divisible by the quadric");
  return std::move(*lambda);
}

Scalar symplectic_form(const JacobianRestriction& q, const CechCocycle& sigma,
                       const Section& v1, const Section& v2) {
  return residue(wedge_contract(sigma.overlap_section, to_laurent(v1), to_laurent(v2), q));
}

Scalar symplectic_form(const CubicFourfold& y, const Line& l, const TangentVector& v1,
                       const TangentVector& v2) {
  const JacobianRestriction q = smooth_jacobian(y, l);
  return symplectic_form(q, connecting_sigma(q), v1.components, v2.components);
}

GramMatrix gram_matrix(const JacobianRestriction& q, const CechCocycle& sigma,
                       std::vector<TangentVector> basis) {
  GramMatrix g;
  const std::size_t n = basis.size();
  g.entries = ExactMatrix(n, n);
  std::vector<LaurentSection> lifted;
  lifted.reserve(n);
  for (const auto& v : basis) lifted.push_back(to_laurent(v.components));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.entries(i, j) = residue(wedge_contract(sigma.overlap_section, lifted[i], lifted[j], q));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!(g.entries(i, j) + g.entries(j, i)).is_zero()) {
        throw InconsistencyError("Gram matrix is not antisymmetric");
      }
    }
  }
  g.rank = rank(g.entries);
  g.non_generic = n != 4;
  g.basis = std::move(basis);
  return g;
}

GramMatrix gram_matrix(const CubicFourfold& y, const Line& l) {
  const JacobianRestriction q = smooth_jacobian(y, l);
  return gram_matrix(q, connecting_sigma(q), tangent_space_basis(q));
}

}  // namespace fano
