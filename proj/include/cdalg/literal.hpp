#pragma once

#include <string>
#include <string_view>

#include "cdalg/element.hpp"

namespace cdalg {

/// Parses an element literal at the given level:
///
///     element := ['+'|'-'] term (('+'|'-') term)*
///     term    := [coeff ['*']] 'e' index | coeff
///     coeff   := int | int '/' int
///
/// e.g. "e1 + 2*e10 - 1/2*e15". A bare coeff is a multiple of e0; repeated
/// indices accumulate. Whitespace between tokens is ignored.
Element parse_element(unsigned level, std::string_view text);

/// Canonical literal: ascending index, unit coefficients omitted, the e0 term
/// written as a bare coefficient, "0" for the zero element.
/// parse_element(x.level(), format_element(x)) == x.
std::string format_element(const Element& x);

} // namespace cdalg
