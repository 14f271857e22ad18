// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fano/errors.hpp"
#include "fano/pfaffian.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BinaryForm bf(std::initializer_list<long> c) {
  Vector v;
  for (long x : c) v.push_back(x);
  return BinaryForm(static_cast<int>(v.size()) - 1, v);
}

oracle::QRow qrow(const ExactMatrix& m, std::size_t r) {
  oracle::QRow out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c).rational_value());
  return out;
}

bool is_zero_vec(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

void worked_fermat(Outcome& o) {
  const auto t0 = Clock::now();
  const CubicFourfold y = CubicFourfold::fermat();
  const Line l = Line::from_matrix(ExactMatrix::from_rows({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}}));
  const JacobianRestriction q = smooth_jacobian(y, l);
  const auto basis = tangent_space_basis(q);
  o.require(basis.size() == 4, "tangent dimension 4");
  const SplittingData sd = splitting_basis(q);
  o.require(sd.kind == SplittingKind::Type2 && sd.h0_table.at(-1) == 2, "Type2 with h0(N(-1)) = 2");
  const CechCocycle c = connecting_sigma(q);
  const Scalar third = Scalar::rational(1, 3);
  LaurentSection sigma{LaurentBivariate::monomial(-2, 0, third), LaurentBivariate::monomial(0, -2, -third),
                       LaurentBivariate(-2), LaurentBivariate(-2)};
  o.require(c.overlap_section == sigma, "sigma = ((1/3) t0^-2, -(1/3) t1^-2, 0, 0)");
  const BinaryForm z(1), s = bf({1, 0}), t = bf({0, 1});
  const std::vector<Section> expected{{z, z, s, z}, {z, z, t, z}, {z, z, z, s}, {z, z, z, t}};
  for (std::size_t i = 0; i < 4; ++i) o.require(basis[i].components == expected[i], "basis order t0g1, t1g1, t0g2, t1g2");
  const GramMatrix g = gram_matrix(q, c, basis);
  const Scalar n = Scalar::rational(1, 9);
  const ExactMatrix j = ExactMatrix::from_rows({{0, 0, 0, n}, {0, 0, n, 0}, {0, -n, 0, 0}, {-n, 0, 0, 0}});
  ExactMatrix neg = j;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) neg(r, k) = -j(r, k);
  }
  o.require(g.entries == j || g.entries == neg, "Gram = +-(1/9) J");
  o.require(g.rank == 4, "rank 4");
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime < 1 s");
  o.note << "gram(0,3) = " << g.entries(0, 3) << ", " << secs << " s";
}

void symplecticity(Outcome& o) {
  const auto t0 = Clock::now();
  gen::Rng rng(2024);
  std::size_t cubics = 0, triples = 0, rank_checked = 0, skipped = 0;
  for (std::uint64_t seed = 1000; cubics < 25; ++seed) {
    const Line l = random_line(seed, 3);
    const CubicFourfold y = cubic_through_line(l, seed, 5);
    ++cubics;
    const JacobianRestriction q = jacobian_on_line(y, l);
    const auto basis = tangent_space_basis(q);
    if (!smooth_along_line(q) || basis.size() != 4) {
      ++skipped;
      continue;
    }
    const CechCocycle c = connecting_sigma(q);
    const GramMatrix g = gram_matrix(q, c, basis);
    o.require(g.rank == 4, "Gram rank 4");
    ++rank_checked;
    for (int r = 0; r < 5; ++r) {
      const Section v = gen::combination(rng, basis, 5).components;
      const Section w = gen::combination(rng, basis, 5).components;
      const Section u = gen::combination(rng, basis, 5).components;
      const Scalar a = rng.scalar(7), b = rng.scalar(7);
      const Scalar vu = symplectic_form(q, c, v, u);
      o.require(vu + symplectic_form(q, c, u, v) == Scalar(0), "antisymmetry");
      o.require(symplectic_form(q, c, scaled(a, v) + scaled(b, w), u) == a * vu + b * symplectic_form(q, c, w, u),
                "bilinearity");
      ++triples;
    }
  }
  const double secs = seconds_since(t0);
  o.require(cubics >= 20 && triples >= 100, "sample size");
  o.require(secs < 120.0, "runtime < 2 min");
  o.note << cubics << " cubics, " << triples << " triples, " << rank_checked << " rank checks, " << skipped
         << " skipped (not smooth or dim != 4), " << secs << " s";
}

void splitting_structure(Outcome& o) {
  const BinaryForm t0 = bf({1, 0}), t1 = bf({0, 1});
  std::vector<gen::Instance> sample;
  sample.push_back({CubicFourfold::fermat(),
                    Line::from_matrix(ExactMatrix::from_rows({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}})), 0});
  for (std::uint64_t seed = 0; seed < 30; ++seed) sample.push_back(gen::smooth_instance(3000 + seed * 7));
  for (std::uint64_t seed = 0; seed < 10; ++seed) sample.push_back(gen::type2_instance(seed));
  std::size_t type1 = 0, type2 = 0;
  for (const auto& in : sample) {
    const JacobianRestriction q = jacobian_on_line(in.cubic, in.line);
    const int m1 = twisted_section_dim(q, -1);
    o.require(m1 == 1 || m1 == 2, "h0(N(-1)) in {1, 2}");
    const SplittingData sd = splitting_basis(q);
    const CechCocycle c = connecting_sigma(q);
    const SigmaComponents sc = sigma_splitting_components(c, sd);
    std::array<std::array<Section, 2>, 2> planes;
    if (sd.kind == SplittingKind::Type1) {
      ++type1;
      o.require(is_zero_vec(sc.h1[2]), "Type1 sigma3 = 0");
      o.require(!sc.type1_determinant().is_zero(), "Type1 sigma1, sigma2 independent in H1(O(-3))");
      planes[0] = {sd.summands[0].generator, sd.summands[1].generator};
      planes[1] = {times(t0, sd.summands[2].generator), times(t1, sd.summands[2].generator)};
    } else {
      ++type2;
      o.require(is_zero_vec(sc.h1[1]) && is_zero_vec(sc.h1[2]), "Type2 sigma2 = sigma3 = 0");
      o.require(!sc.type2_discriminant().is_zero(), "Type2 sigma1 nondegenerate");
      planes[0] = {times(t0, sd.summands[1].generator), times(t1, sd.summands[1].generator)};
      planes[1] = {times(t0, sd.summands[2].generator), times(t1, sd.summands[2].generator)};
    }
    for (const auto& pl : planes) o.require(symplectic_form(q, c, pl[0], pl[1]).is_zero(), "Lagrangian summand");
  }
  o.require(type1 > 0 && type2 > 0, "both types sampled");
  o.note << sample.size() << " lines: " << type1 << " Type1, " << type2 << " Type2";
}

void oracle_equivalence(Outcome& o) {
  std::size_t lines = 0, entries = 0;
  gen::Rng rng(77);
  for (std::uint64_t seed = 0; lines < 55; ++seed) {
    const gen::Instance in = seed % 5 == 4 ? gen::type2_instance(seed) : gen::smooth_instance(5000 + seed * 3);
    ++lines;
    for (int j = -2; j <= 2; ++j) {
      const int lib = twisted_section_dim(in.cubic, in.line, j);
      const int ref = oracle::h0_normal_twist(in.cubic.form(), qrow(in.line.span(), 0), qrow(in.line.span(), 1), j);
      o.require(lib == ref, "h0(N(j)) matches the dense oracle");
    }
    const JacobianRestriction q = jacobian_on_line(in.cubic, in.line);
    const CechCocycle c = connecting_sigma(q);
    const auto basis = tangent_space_basis(q);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto la = to_laurent(basis[a].components), lb = to_laurent(basis[b].components);
        const LaurentBivariate ref = wedge_contract(c.overlap_section, la, lb, q);
        for (std::size_t k = 0; k < 4; ++k) {
          if (q.quadrics[k].is_zero()) continue;
          o.require(wedge_contract(c.overlap_section, la, lb, q, k) == ref, "contraction index independence");
          ++entries;
        }
      }
    }
  }
  o.note << lines << " lines, j in [-2, 2], " << entries << " contractions compared";
}

void pfaffian_suite(Outcome& o) {
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SkewLinearMatrix m = SkewLinearMatrix::random(seed + 100, 3);
    std::array<std::array<oracle::Poly5, 6>, 6> grid;
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 6; ++c) {
        for (const auto& [e, coeff] : m.entry(r, c).terms()) {
          grid[r][c][{e[0], e[1], e[2], e[3], e[4]}] = coeff.rational_value();
        }
      }
    }
    const MultiForm pf = pfaffian(m);
    oracle::Poly5 sq;
    const MultiForm pf2 = pf * pf;
    for (const auto& [e, coeff] : pf2.terms()) sq[{e[0], e[1], e[2], e[3], e[4]}] = coeff.rational_value();
    o.require(sq == oracle::det_laplace(grid), "Pf^2 = det");
  }
  const double pf_secs = seconds_since(t0);
  o.require(pf_secs < 30.0, "Pf^2 = det within 30 s");

  const SkewLinearMatrix generic = generic_skew_linear(2024, 3);
  const std::uint32_t p = 31;
  std::array<std::array<Vector, 6>, 6> g;
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      for (const auto& x : generic.coefficients(r, c)) g[r][c].push_back(x.in_field(p));
    }
  }
  const SkewLinearMatrix mp(g);
  const CubicThreefold x{pfaffian(mp)};
  const auto pts = points_mod_p(x, p, 200);
  o.require(pts.size() == 200, "200 points on Pf = 0");
  std::size_t rank4 = 0;
  for (const auto r : rank_profile(mp, x, pts)) {
    o.require(r % 2 == 0, "rank parity");
    rank4 += r == 4;
  }

  const CohomologyTable t = graded_cohomology_table(generic, -4, 1);
  o.require(t.find(0)->h[0] == 6, "h0(E(1)) = 6");
  o.require(t.find(1)->h[0] == 24, "h0(E(2)) = 24");
  o.require(t.vanishing_band(), "vanishing band for E, E(-1), E(-2)");
  for (const auto& r : t.rows) o.require(r.euler_ok(), "Euler characteristic check");
  o.note << "Pf^2 = det on 50 matrices in " << pf_secs << " s; " << rank4 << "/200 points of rank 4 over F_" << p;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"worked Fermat instance", worked_fermat},
      {"symplecticity suite", symplecticity},
      {"splitting dichotomy and sigma structure", splitting_structure},
      {"oracle equivalence", oracle_equivalence},
      {"Pfaffian suite", pfaffian_suite},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name << "): " << o.note.str()
              << '\n';
    failures += !o.ok;
  }
  std::cout << "PASS criterion 6 (scope statement): closedness of the 2-form, the Ext isomorphism, "
               "dim Ext^1(F_l, F_l) = 4 and the 10-dimensional moduli space are not computed and no "
               "check here claims them\n";
  return failures == 0 ? 0 : 1;
}
