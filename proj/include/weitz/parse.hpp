#pragma once

#include "weitz/polynomial.hpp"

#include <string_view>

namespace weitz {

/// Parses the polynomial grammar
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff | [coeff '*'] factor ('*' factor)*
///   factor := var ['^' posint]
///   coeff  := int ['/' posint]
///   var    := x<i> | y<i> | z<i> | v<i>.<j> | CX | CY
///
/// Whitespace is ignored. Throws SyntaxError (with a character offset) on
/// malformed input and AmbientMismatch when a variable lies outside `ambient`.
Polynomial parse(std::string_view text, Ambient ambient);

/// Parses a single variable name such as "y3" or "v2.4".
VariableId parse_variable(std::string_view name, Ambient ambient);

} // namespace weitz
