#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "birat/bipoly.hpp"
#include "birat/monomial.hpp"

namespace birat {

struct IdealSpec {
  std::vector<BiPoly> generators;
  TermOrder order;
};

/// Monic Groebner basis. When `reduced` is set the basis is the unique
/// reduced one and is sorted ascending by leading monomial.
struct GroebnerBasis {
  std::vector<BiPoly> elements;
  TermOrder order;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  /// True for the basis {1}.
  bool is_unit() const;
};

struct NormalForm {
  BiPoly remainder;
  /// One quotient per reducer, in the reducer's list position.
  std::vector<BiPoly> quotients;
};

/// Multivariate division of `f` by `reducers`:
/// f = sum quotients[i] * reducers[i] + remainder, and no term of the
/// remainder is divisible by a reducer's leading monomial. The leading term
/// of the running dividend is reduced first, using the first reducer (in
/// list order) whose leading monomial divides it.
NormalForm normal_form(const BiPoly& f, std::span<const BiPoly> reducers,
                       const TermOrder& order);

/// Remainder-only form of normal_form.
BiPoly reduce(const BiPoly& f, std::span<const BiPoly> reducers, const TermOrder& order);

/// (L / lt(f)) * f - (L / lt(g)) * g with L the lcm of the leading monomials.
/// Throws kZeroPolynomial if either input is zero.
BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, const TermOrder& order);

/// Buchberger completion (normal selection strategy, coprime and chain
/// criteria). Returns {1} as soon as a nonzero constant appears.
/// Throws kAllZeroGenerators if no generator is nonzero.
GroebnerBasis buchberger(const IdealSpec& ideal);

/// Unique monic reduced basis from any Groebner basis.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// buchberger followed by reduce_basis.
GroebnerBasis reduced_groebner_basis(const IdealSpec& ideal);

/// True when every pairwise S-polynomial of `elements` reduces to 0.
bool satisfies_buchberger_criterion(std::span<const BiPoly> elements, const TermOrder& order);

/// Number of standard monomials of a zero-dimensional ideal, or nullopt
/// ("infinite") when the leading monomials lack a pure power of s or of t.
struct Staircase {
  std::optional<std::uint64_t> count;

  bool is_finite() const { return count.has_value(); }
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

Staircase staircase_dimension(const GroebnerBasis& basis);

}  // namespace birat
