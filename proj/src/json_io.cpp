#include "fano/json_io.hpp"

#include "fano/errors.hpp"

namespace fano::io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

const json& field(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, std::uint32_t p) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), p);
  if (j.is_number_integer()) {
    const Scalar s(static_cast<long>(j.get<std::int64_t>()));
    return p == 0 ? s : s.in_field(p);
  }
  throw ParseError("scalars must be rational strings or integers");
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vector vector_from_json(const json& j, std::uint32_t p) {
  expect(j.is_array(), "expected an array of scalars");
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, p));
  return out;
}

json to_json(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

ExactMatrix matrix_from_json(const json& j, std::uint32_t p) {
  expect(j.is_array(), "expected an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, p));
  for (const auto& r : rows) expect(r.size() == rows.front().size(), "ragged matrix rows");
  return ExactMatrix::from_rows(rows);
}

json to_json(const MultiForm& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

MultiForm form_from_json(const json& j, std::uint32_t p) {
  const json& nv = field(j, "nvars");
  const json& dg = field(j, "degree");
  expect(nv.is_number_integer() && dg.is_number_integer(), "nvars and degree must be integers");
  MultiForm f(nv.get<int>(), dg.get<int>());
  const json& terms = field(j, "terms");
  expect(terms.is_array(), "terms must be an array");
  for (const auto& t : terms) {
    const json& e = field(t, "exp");
    expect(e.is_array(), "exp must be an integer array");
    Exponent ex;
    for (const auto& x : e) {
      expect(x.is_number_integer(), "exp must be an integer array");
      ex.push_back(x.get<int>());
    }
    try {
      f.add_term(ex, scalar_from_json(field(t, "coeff"), p));
    } catch (const GradingError& err) {
      throw ParseError(err.what());
    }
  }
  return f;
}

json to_json(const CubicFourfold& y) { return to_json(y.form()); }

CubicFourfold cubic_from_json(const json& j, std::uint32_t p) {
  MultiForm f = form_from_json(j, p);
  expect(f.nvars() == 6 && f.degree() == 3, "cubic must have nvars 6 and degree 3");
  return CubicFourfold(std::move(f));
}

json to_json(const Line& l) { return {{"span", to_json(l.span())}}; }

Line line_from_json(const json& j, std::uint32_t p) {
  const ExactMatrix a = matrix_from_json(field(j, "span"), p);
  expect(a.rows() == 2 && a.cols() == 6, "span must be 2 x 6");
  return Line::from_matrix(a);
}

json to_json(const BinaryForm& f) { return to_json(f.coeffs()); }

BinaryForm binary_form_from_json(const json& j, std::uint32_t p) {
  Vector c = vector_from_json(j, p);
  expect(!c.empty(), "binary form needs at least one coefficient");
  const int d = static_cast<int>(c.size()) - 1;
  return BinaryForm(d, std::move(c));
}

json to_json(const Section& s) {
  json out = json::array();
  for (const auto& f : s) out.push_back(to_json(f));
  return out;
}

Section section_from_json(const json& j, std::uint32_t p) {
  expect(j.is_array() && j.size() == 4, "section needs 4 components");
  return {binary_form_from_json(j[0], p), binary_form_from_json(j[1], p),
          binary_form_from_json(j[2], p), binary_form_from_json(j[3], p)};
}

json to_json(const LaurentBivariate& x) {
  json terms = json::array();
  for (const auto& [i, c] : x.terms()) {
    terms.push_back({{"exp", {i, x.total_degree() - i}}, {"coeff", to_json(c)}});
  }
  return {{"degree", x.total_degree()}, {"terms", terms}};
}

LaurentBivariate laurent_from_json(const json& j, std::uint32_t p) {
  const json& dg = field(j, "degree");
  expect(dg.is_number_integer(), "degree must be an integer");
  LaurentBivariate x(dg.get<int>());
  for (const auto& t : field(j, "terms")) {
    const json& e = field(t, "exp");
    expect(e.is_array() && e.size() == 2, "Laurent exp must have two entries");
    try {
      x.add_term(e[0].get<int>(), e[1].get<int>(), scalar_from_json(field(t, "coeff"), p));
    } catch (const GradingError& err) {
      throw ParseError(err.what());
    }
  }
  return x;
}

json to_json(const LaurentSection& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(to_json(x));
  return out;
}

json to_json(const SkewLinearMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < 6; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 6; ++c) row.push_back(to_json(m.coefficients(r, c)));
    out.push_back(row);
  }
  return out;
}

SkewLinearMatrix skew_from_json(const json& j, std::uint32_t p) {
  expect(j.is_array() && j.size() == 6, "matrix must have 6 rows");
  std::array<std::array<Vector, 6>, 6> c;
  for (std::size_t r = 0; r < 6; ++r) {
    expect(j[r].is_array() && j[r].size() == 6, "matrix rows must have 6 entries");
    for (std::size_t s = 0; s < 6; ++s) {
      c[r][s] = vector_from_json(j[r][s], p);
      expect(c[r][s].size() == 5, "entries must be 5-vectors of linear-form coefficients");
    }
  }
  try {
    return SkewLinearMatrix(c);
  } catch (const GradingError& err) {
    throw ParseError(err.what());
  }
}

json to_json(const SplittingData& sd) {
  json h0 = json::object();
  for (const auto& [j, h] : sd.h0_table) h0[std::to_string(j)] = h;
  json gens = json::array();
  for (const auto& s : sd.summands) gens.push_back({{"twist", s.twist}, {"section", to_json(s.generator)}});
  return {{"type", to_string(sd.kind)}, {"h0", h0}, {"generators", gens}};
}

json to_json(const CechCocycle& c) {
  return {{"overlap", to_json(c.overlap_section)},
          {"chart0_lift", to_json(c.chart0_lift)},
          {"chart1_lift", to_json(c.chart1_lift)}};
}

json to_json(const SigmaComponents& sc, SplittingKind kind) {
  json comps = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    comps.push_back({{"coefficient", to_json(sc.coefficients[i])}, {"h1", to_json(sc.h1[i])}});
  }
  json out = {{"components", comps}};
  if (kind == SplittingKind::Type1) {
    out["independence_determinant"] = to_json(sc.type1_determinant());
  } else {
    out["discriminant"] = to_json(sc.type2_discriminant());
  }
  return out;
}

json to_json(const CohomologyTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"d", r.d},
                    {"bundle_twist", 1 + r.d},
                    {"h", r.h},
                    {"euler", r.euler()},
                    {"euler_expected", r.euler_expected},
                    {"euler_ok", r.euler_ok()}});
  }
  return rows;
}

}  // namespace fano::io
