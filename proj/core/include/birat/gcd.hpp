#pragma once

#include <span>

#include "birat/bipoly.hpp"

namespace birat {

/// Greatest common divisor of the nonzero members of `polys`.
///
/// Each input is viewed as a polynomial in t over k[s]. The gcd of the
/// contents is taken in k[s]; primitive parts are combined with a
/// primitive pseudo-remainder sequence, so no fractions in s ever appear.
/// The result is scaled so that the leading coefficient in t has leading
/// scalar 1; a constant gcd is returned as 1.
///
/// Throws kAllZero when every input is zero (or the list is empty).
BiPoly bivariate_gcd(std::span<const BiPoly> polys);

/// Exact division test in k[s][t]: returns true iff `divisor` divides
/// `dividend`. Throws kDivisionByZero for a zero divisor.
bool divides(const BiPoly& divisor, const BiPoly& dividend);

}  // namespace birat
