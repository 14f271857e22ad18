#pragma once

#include <cstdint>

#include <json.hpp>

#include "fano/cech.hpp"
#include "fano/cubic.hpp"
#include "fano/laurent.hpp"
#include "fano/pfaffian.hpp"
#include "fano/tangent.hpp"

namespace fano::io {

using nlohmann::json;

// All readers throw ParseError on schema violations; `p` > 0 reads every
// coefficient into F_p.

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, std::uint32_t p = 0);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, std::uint32_t p = 0);

json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j, std::uint32_t p = 0);

/// {"nvars":n,"degree":d,"terms":[{"exp":[...],"coeff":"num/den"}]}
json to_json(const MultiForm& f);
MultiForm form_from_json(const json& j, std::uint32_t p = 0);

json to_json(const CubicFourfold& y);
CubicFourfold cubic_from_json(const json& j, std::uint32_t p = 0);

/// {"span":[[6 entries],[6 entries]]}; the reader canonicalizes.
json to_json(const Line& l);
Line line_from_json(const json& j, std::uint32_t p = 0);

/// Coefficients t0^(d-k) t1^k in order.
json to_json(const BinaryForm& f);
BinaryForm binary_form_from_json(const json& j, std::uint32_t p = 0);

json to_json(const Section& s);
Section section_from_json(const json& j, std::uint32_t p = 0);

/// {"degree":d,"terms":[{"exp":[i,j],"coeff":"..."}]}
json to_json(const LaurentBivariate& x);
LaurentBivariate laurent_from_json(const json& j, std::uint32_t p = 0);

json to_json(const LaurentSection& s);

/// 6 x 6 array of 5-vectors of coefficients.
json to_json(const SkewLinearMatrix& m);
SkewLinearMatrix skew_from_json(const json& j, std::uint32_t p = 0);

json to_json(const SplittingData& sd);
json to_json(const CechCocycle& c);
json to_json(const SigmaComponents& sc, SplittingKind kind);
json to_json(const CohomologyTable& t);

}  // namespace fano::io
