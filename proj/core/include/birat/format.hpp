#pragma once

#include <string>

#include "birat/bipoly.hpp"
#include "birat/unipoly.hpp"

namespace birat {

enum class FormatStyle {
  kAsIs,
  kMonic,
  // Integer coefficients, content 1, positive leading coefficient (Q);
  // monic over F_p.
  kIntegerPrimitive,
};

/// Decreasing exponents, e.g. "2*t^8 + t^4 + 3*t + 1". Output parses back
/// with parse_poly when `variable` is 't'.
std::string format_poly(const UniPoly& p, char variable = 't',
                        FormatStyle style = FormatStyle::kAsIs);

/// Terms in decreasing term order, e.g. "t^2*s + s^3 - 2*s".
std::string format_poly(const BiPoly& p, const TermOrder& order,
                        FormatStyle style = FormatStyle::kAsIs);

}  // namespace birat
