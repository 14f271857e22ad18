#include "fano/tangent.hpp"

#include "fano/errors.hpp"

namespace fano {

const char* to_string(SplittingKind kind) noexcept {
  return kind == SplittingKind::Type1 ? "Type1" : "Type2";
}

std::vector<Section> SplittingData::minus_one_generators() const {
  if (kind == SplittingKind::Type1) return {summands[2].generator};
  return {summands[1].generator, summands[2].generator};
}

ExactMatrix twisted_pairing_matrix(const JacobianRestriction& q, int j) {
  const int d = j + 1;
  if (d < 0) return ExactMatrix(0, 0);
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  ExactMatrix m(static_cast<std::size_t>(d) + 3, 4 * width);
  for (std::size_t i = 0; i < 4; ++i) {
    const BinaryForm& qi = q.quadrics[i];
    for (std::size_t k = 0; k < width; ++k) {
      for (int r = 0; r <= qi.degree(); ++r) {
        m(k + static_cast<std::size_t>(r), i * width + k) = qi.coeff(r);
      }
    }
  }
  return m;
}

std::vector<Section> twisted_sections(const JacobianRestriction& q, int j) {
  const int d = j + 1;
  if (d < 0) return {};
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  std::vector<Section> out;
  for (const auto& v : kernel_basis(twisted_pairing_matrix(q, j))) {
    Section s;
    for (std::size_t i = 0; i < 4; ++i) {
      s[i] = BinaryForm(d, Vector(v.begin() + static_cast<std::ptrdiff_t>(i * width),
                                  v.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

int twisted_section_dim(const JacobianRestriction& q, int j) {
  if (j + 1 < 0) return 0;
  const ExactMatrix m = twisted_pairing_matrix(q, j);
  return static_cast<int>(m.cols() - rank(m));
}

JacobianRestriction smooth_jacobian(const CubicFourfold& y, const Line& l) {
  JacobianRestriction q = jacobian_on_line(y, l);
  if (!smooth_along_line(q)) throw SingularAlongLineError("cubic is singular along the line");
  return q;
}

int twisted_section_dim(const CubicFourfold& y, const Line& l, int j) {
  return twisted_section_dim(smooth_jacobian(y, l), j);
}

std::vector<TangentVector> tangent_space_basis(const JacobianRestriction& q) {
  std::vector<TangentVector> out;
  for (auto& s : twisted_sections(q, 0)) out.push_back({std::move(s)});
  return out;
}

std::vector<TangentVector> tangent_space_basis(const CubicFourfold& y, const Line& l) {
  return tangent_space_basis(smooth_jacobian(y, l));
}

SplittingKind splitting_type(const JacobianRestriction& q) {
  const int h = twisted_section_dim(q, -1);
  if (h == 1) return SplittingKind::Type1;
  if (h == 2) return SplittingKind::Type2;
  throw InconsistencyError("h0(N(-1)) = " + std::to_string(h) +
                           " fits neither normal bundle splitting type");
}

SplittingKind splitting_type(const CubicFourfold& y, const Line& l) {
  return splitting_type(smooth_jacobian(y, l));
}

Vector flatten(const Section& s) {
  Vector out;
  for (const auto& f : s) out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
  return out;
}

Section make_monic(const Section& s) {
  for (const auto& c : flatten(s)) {
    if (!c.is_zero()) return scaled(c.inverse(), s);
  }
  return s;
}

namespace {

// Greedily extends `fixed` by members of `candidates` that raise the rank of
// the span, until `wanted` extra sections have been taken.
std::vector<Section> extend_basis(const std::vector<Section>& fixed,
                                  const std::vector<Section>& candidates, std::size_t wanted) {
  std::vector<Vector> rows;
  for (const auto& s : fixed) rows.push_back(flatten(s));
  std::vector<Section> taken;
  for (const auto& c : candidates) {
    if (taken.size() == wanted) break;
    rows.push_back(flatten(c));
    if (rank(ExactMatrix::from_rows(rows)) == rows.size()) {
      taken.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  if (taken.size() != wanted) throw InconsistencyError("cannot complete the splitting basis");
  return taken;
}

}  // namespace

SplittingData splitting_basis(const JacobianRestriction& q) {
  SplittingData data;
  data.kind = splitting_type(q);
  for (int j = -2; j <= 2; ++j) data.h0_table[j] = twisted_section_dim(q, j);
  if (data.h0_table[0] != 4) {
    throw InconsistencyError("h0(N) = " + std::to_string(data.h0_table[0]) + ", expected 4");
  }
  const BinaryForm t0 = BinaryForm::monomial(1, 0);
  const BinaryForm t1 = BinaryForm::monomial(0, 1);
  const auto g = twisted_sections(q, -1);
  if (data.kind == SplittingKind::Type1) {
    const Section e3 = make_monic(g[0]);
    std::vector<Section> candidates;
    for (auto& v : twisted_sections(q, 0)) candidates.push_back(std::move(v));
    const auto e = extend_basis({times(t0, e3), times(t1, e3)}, candidates, 2);
    data.summands = {Summand{0, make_monic(e[0])}, Summand{0, make_monic(e[1])}, Summand{1, e3}};
  } else {
    const Section g1 = make_monic(g[0]);
    const Section g2 = make_monic(g[1]);
    std::vector<Section> fixed;
    for (const auto& gi : {g1, g2}) {
      for (const auto& m : {t0 * t0, t0 * t1, t1 * t1}) fixed.push_back(times(m, gi));
    }
    auto e1 = extend_basis(fixed, twisted_sections(q, 1), 1);
    data.summands = {Summand{-1, make_monic(e1[0])}, Summand{1, g1}, Summand{1, g2}};
  }
  return data;
}

SplittingData splitting_basis(const CubicFourfold& y, const Line& l) {
  return splitting_basis(smooth_jacobian(y, l));
}

}  // namespace fano
