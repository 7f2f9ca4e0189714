#pragma once

#include <string_view>

#include "birat/unipoly.hpp"

namespace birat {

/// Parses a univariate polynomial in `t`.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | integer '/' integer | 't' | 't' '^' uint | '(' expr ')'
///
/// Multiplication must be explicit ("3*t", not "3t"); whitespace is ignored.
/// Coefficients are mapped into `field`. Throws SyntaxError (with byte
/// offset) on malformed input and kDivisionByZero when a literal's
/// denominator vanishes in the field.
UniPoly parse_poly(std::string_view text, const Field& field);

/// Degree bound enforced by the parser.
inline constexpr std::uint32_t kMaxParsedDegree = 1u << 16;

}  // namespace birat
