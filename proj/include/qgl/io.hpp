#pragma once
// JSON forms of scalars and algebra elements.
//
//   scalar:    {"num": "...", "den": "..."} (generic) or {"cyclo": ["c_0", ...]}
//   element:   {"terms": [{"coeff": scalar, "word": ["x[1,1]", ...]}, ...],
//               "ginv_power": t, "text": "..."}   (ginv_power only on the O side)
//   tensor:    {"terms": [{"coeff": scalar, "legs": [[letters...], ...]}]}

#include <json.hpp>
#include "qgl/oab.hpp"
#include "qgl/uab.hpp"

namespace qgl {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f);

json poly_to_json(const NCPoly& p, const Alphabet& a);
NCPoly poly_from_json(const json& j, const Alphabet& a, const Field& f);

json element_to_json(const OSession& s, const GLElement& x);
GLElement element_from_json(const OSession& s, const json& j);

json tensor_to_json(const Tensor& t, const Alphabet& a);

}  // namespace qgl
