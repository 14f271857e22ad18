#include <doctest.h>

#include "fano/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {

ExactMatrix l0_span() { return ExactMatrix::from_rows({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}}); }

/// 4 x 3 coefficient matrix of the quadrics.
ExactMatrix quadric_matrix(const JacobianRestriction& q) {
  ExactMatrix m(4, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    for (int k = 0; k < 3; ++k) m(i, static_cast<std::size_t>(k)) = q.quadrics[i].coeff(k);
  }
  return m;
}

JacobianRestriction quadrics(std::initializer_list<std::array<long, 3>> rows) {
  JacobianRestriction q{};
  std::size_t i = 0;
  for (const auto& r : rows) q.quadrics[i++] = BinaryForm(2, {r[0], r[1], r[2]});
  for (; i < 4; ++i) q.quadrics[i] = BinaryForm(2);
  return q;
}

std::vector<long> key_of(const Line& l, long p) {
  std::vector<long> key;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 6; ++c) key.push_back(static_cast<long>(l.span()(r, c).residue()) % p);
  }
  return key;
}

}  // namespace

TEST_SUITE("cubic_geometry") {
  TEST_CASE("contains_line examples") {
    const CubicFourfold y = CubicFourfold::fermat();
    CHECK(contains_line(y, l0_span()));
    CHECK_FALSE(contains_line(y, ExactMatrix::from_rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}})));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Line l = random_line(seed, 3);
      CHECK(contains_line(cubic_through_line(l, seed, 5), l));
    }
  }

  TEST_CASE("cubic validation") {
    MultiForm quad(6, 2);
    CHECK_THROWS_AS(CubicFourfold{quad}, GradingError);
    CHECK_THROWS_AS(CubicFourfold{MultiForm(5, 3)}, GradingError);
    CHECK_THROWS_AS(jacobian_on_line(CubicFourfold::fermat(), Line::coordinate_line()), LineNotOnCubicError);
    CHECK_THROWS_AS(Line::from_matrix(ExactMatrix::from_rows({{1, 1, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}})),
                    DegenerateLineError);
  }

  TEST_CASE("Fermat Jacobian on the worked line") {
    const Line l = Line::from_matrix(l0_span());
    CHECK(l.frame() == ExactMatrix::from_rows({{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                                               {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
    const JacobianRestriction q = jacobian_on_line(CubicFourfold::fermat(), l);
    CHECK(q.quadrics[0] == BinaryForm(2, {3, 0, 0}));
    CHECK(q.quadrics[1] == BinaryForm(2, {0, 0, 3}));
    CHECK(q.quadrics[2].is_zero());
    CHECK(q.quadrics[3].is_zero());
    CHECK(q.first_nonzero() == 0);
    CHECK(smooth_along_line(q));
  }

  TEST_CASE("smooth_along_line examples") {
    CHECK(smooth_along_line(quadrics({{3, 0, 0}, {0, 0, 3}})));
    CHECK_FALSE(smooth_along_line(quadrics({{0, 1, 0}, {1, 0, 0}})));
    CHECK(smooth_along_line(quadrics({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK_FALSE(smooth_along_line(quadrics({})));
    // common root at (1 : 1)
    CHECK_FALSE(smooth_along_line(quadrics({{1, -2, 1}, {1, 0, -1}})));
  }

  TEST_CASE("singular point forces a common root") {
    // F = x0^2 x2 + x0 x1 x3 + x2^3: gradient (s^2, s t, 0, 0) along the
    // coordinate line, so Y is singular at (0 : 1 : 0 : 0 : 0 : 0).
    MultiForm f(6, 3);
    f.add_term({2, 0, 1, 0, 0, 0}, 1);
    f.add_term({1, 1, 0, 1, 0, 0}, 1);
    f.add_term({0, 0, 3, 0, 0, 0}, 1);
    const CubicFourfold y(f);
    const JacobianRestriction q = jacobian_on_line(y, Line::coordinate_line());
    CHECK_FALSE(smooth_along_line(q));
    for (const auto& qi : q.quadrics) CHECK(qi.evaluate(0, 1).is_zero());
    CHECK_THROWS_AS(smooth_jacobian(y, Line::coordinate_line()), SingularAlongLineError);
  }

  TEST_CASE("cubic_through_line omits the pure line monomials and is deterministic") {
    const Line c = Line::coordinate_line();
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const CubicFourfold y = cubic_through_line(c, seed, 5);
      for (int k = 0; k <= 3; ++k) CHECK(y.form().coeff({3 - k, k, 0, 0, 0, 0}).is_zero());
      CHECK(y.form() == cubic_through_line(c, seed, 5).form());
      for (const auto& [e, coeff] : y.form().terms()) {
        CHECK(coeff.rational_value() <= 5);
        CHECK(coeff.rational_value() >= -5);
      }
    }
    CHECK_FALSE(cubic_through_line(c, 1, 5).form() == cubic_through_line(c, 2, 5).form());
  }

  TEST_CASE("Euler identity for constructed cubics") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Line l = random_line(seed, 3);
      const CubicFourfold y = cubic_through_line(l, seed, 5);
      MultiForm e(6, 3);
      for (int i = 0; i < 6; ++i) e += MultiForm::variable(6, i) * y.gradient()[static_cast<std::size_t>(i)];
      CHECK(e == Scalar(3) * y.form());
    }
  }

  TEST_CASE("quadric span is frame independent") {
    gen::Rng rng(99);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const gen::Instance in = gen::smooth_instance(seed * 7);
      const JacobianRestriction q = jacobian_on_line(in.cubic, in.line);
      // another complement: perturb every frame row by span combinations and mix
      ExactMatrix frame = in.line.frame();
      ExactMatrix mix = gen::matrix(rng, 4, 4, 3);
      while (determinant(mix).is_zero()) mix = gen::matrix(rng, 4, 4, 3);
      const ExactMatrix shift = gen::matrix(rng, 4, 2, 3) * in.line.span();
      frame = mix * frame;
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 6; ++c) frame(r, c) += shift(r, c);
      }
      // and another parameterization of the same line
      ExactMatrix g = gen::matrix(rng, 2, 2, 3);
      while (determinant(g).is_zero()) g = gen::matrix(rng, 2, 2, 3);
      const JacobianRestriction q2 = jacobian_on_parameterization(in.cubic, g * in.line.span(), frame);
      // row spaces agree after undoing the reparameterization on (s, t)
      const std::array<std::array<Scalar, 2>, 2> gs{{{g(0, 0), g(0, 1)}, {g(1, 0), g(1, 1)}}};
      JacobianRestriction q_back = q;
      for (auto& f : q_back.quadrics) f = f.substitute(gs);
      const ExactMatrix a = quadric_matrix(q_back), b = quadric_matrix(q2);
      CHECK(rank(a) == rank(b));
      CHECK(rank(a.stacked(b)) == rank(a));
    }
  }

  TEST_CASE("line canonicalization is idempotent and parameterization independent") {
    gen::Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
      const ExactMatrix a = gen::matrix(rng, 2, 6, 4);
      if (rank(a) < 2) continue;
      const Line l = Line::from_matrix(a);
      CHECK(Line::from_matrix(l.span()) == l);
      ExactMatrix g = gen::matrix(rng, 2, 2, 5);
      if (determinant(g).is_zero()) continue;
      CHECK(Line::from_matrix(g * a) == l);
      CHECK(determinant(l.chart()) != Scalar(0));
    }
  }

  TEST_CASE("enumerated lines agree with the point-pair oracle") {
    const MultiForm fermat = CubicFourfold::fermat().form();
    for (long p : {3L, 5L}) {
      const CubicFourfold y = CubicFourfold::fermat().in_field(static_cast<std::uint32_t>(p));
      const auto lines = enumerate_lines_mod_p(y, static_cast<std::uint32_t>(p), 100000, 2);
      std::set<std::vector<long>> got;
      for (const auto& l : lines) {
        CHECK(contains_line(y, l));
        got.insert(key_of(l, p));
      }
      CHECK(got.size() == lines.size());
      CHECK(got == oracle::lines_by_point_pairs(fermat, p));
    }
  }

  TEST_CASE("Fermat line counts are frozen") {
    CHECK(oracle::points_on(CubicFourfold::fermat().form(), 3) == 121);
    CHECK(oracle::points_on(CubicFourfold::fermat().form(), 5) == 781);
    CHECK(enumerate_lines_mod_p(CubicFourfold::fermat().in_field(3), 3, 100000).size() == 1210);
    CHECK(enumerate_lines_mod_p(CubicFourfold::fermat().in_field(5), 5, 100000, 4).size() == 1056);
  }

  TEST_CASE("enumeration is deterministic, sorted and truncated") {
    const CubicFourfold y = CubicFourfold::fermat().in_field(5);
    const auto a = enumerate_lines_mod_p(y, 5, 40, 1);
    const auto b = enumerate_lines_mod_p(y, 5, 40, 3);
    CHECK(a.size() == 40);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
    const auto all = enumerate_lines_mod_p(y, 5, 100000, 2);
    CHECK(std::equal(a.begin(), a.end(), all.begin()));
  }

  TEST_CASE("worked line persists mod 7") {
    const CubicFourfold y = CubicFourfold::fermat().in_field(7);
    const Line l7 = Line::from_matrix(l0_span()).in_field(7);
    const auto lines = enumerate_lines_mod_p(y, 7, 1000000, 4);
    CHECK(std::find(lines.begin(), lines.end(), l7) != lines.end());
    for (const auto& l : lines) CHECK(contains_line(y, l));
  }
}
