#pragma once

#include <optional>

#include <json.hpp>

#include "idiag/decomposition.hpp"
#include "idiag/diagram.hpp"
#include "idiag/linalg.hpp"
#include "idiag/measures.hpp"
#include "idiag/polynomial.hpp"

/// JSON wire formats. Rationals travel as canonical strings ("3", "-1/2");
/// readers also accept JSON integers. Malformed documents raise
/// Error(InvalidInput) or the more specific domain error.
namespace idiag::json_io {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// ["p/q", ...]
json to_json(const Point& p);
Point point_from_json(const json& j);

/// {"dim": n, "generators": [[...], ...]}; reading canonicalizes.
json to_json(const Diagram& g);
Diagram diagram_from_json(const json& j);

/// {"dim": n, "polys": ["text", ...]}
json to_json(const SingularityInput& u);
SingularityInput input_from_json(const json& j);

/// Row-major: [[...], ...] or a flat array of n*n entries.
linalg::Matrix matrix_from_json(const json& j, std::size_t dim);

/// {"verdict", "left"?, "right"?, "method", "detail"?, "verified": true}
json to_json(const DecompositionCertificate& c);
DecompositionCertificate certificate_from_json(const json& j);

json to_json(const ExtremityReport& r);

/// {"newton_number": "p/q" | "infinite"}
json to_json(const NewtonNumber& n);

/// {"homothetic": false} or {"homothetic": true, "c": ..., "x": [...]}
json to_json(const std::optional<HomothetyWitness>& w);

}  // namespace idiag::json_io
