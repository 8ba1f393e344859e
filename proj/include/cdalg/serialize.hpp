#pragma once

#include <nlohmann/json.hpp>

#include "cdalg/classification.hpp"
#include "cdalg/element.hpp"
#include "cdalg/structure_maps.hpp"

namespace cdalg {

using Json = nlohmann::ordered_json;

/// {"level": n, "coeffs": ["p/q", ...]}
Json to_json(const Element& x);
/// Inverse of to_json(Element); throws parse on malformed input.
Element element_from_json(const Json& j);

/// {"element", "level", "alternative", "strongly_alternative", "witness"?}
Json to_json(const Element& a, const AltStatus& status);

/// {"level", "elements", "labels", "table", "closed"}; a table cell is the
/// coordinate vector over `elements`, or null when the product leaves the span.
Json to_json(const SubalgebraBasis& basis);

} // namespace cdalg
