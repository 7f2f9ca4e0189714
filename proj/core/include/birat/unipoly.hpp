#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>

#include "birat/coeff.hpp"

namespace birat {

/// Degree of a polynomial; the zero polynomial has degree minus infinity,
/// which is a distinct state rather than a magic integer.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(std::uint32_t value) : value_(value), finite_(true) {}

  bool is_neg_infinity() const { return !finite_; }
  /// Throws kZeroPolynomial for minus infinity.
  std::uint32_t value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.value_ < b.value_;
  }

 private:
  Degree() = default;
  std::uint32_t value_ = 0;
  bool finite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Sparse univariate polynomial over a coefficient field. No stored
/// coefficient is ever zero.
class UniPoly {
 public:
  using Terms = std::map<std::uint32_t, Scalar>;

  explicit UniPoly(Field field) : field_(field) {}
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  UniPoly(Field field, std::initializer_list<std::pair<std::uint32_t, long>> terms);

  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(const Scalar& c, std::uint32_t exponent);
  /// The variable itself (x^1).
  static UniPoly variable(Field field);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Degree degree() const;
  /// Coefficient of x^exponent (zero if absent).
  Scalar coefficient(std::uint32_t exponent) const;
  /// Throws kZeroPolynomial for the zero polynomial.
  const Scalar& leading_coefficient() const;

  /// Adds c*x^exponent in place.
  void add_term(std::uint32_t exponent, const Scalar& c);

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Scalar& c, const UniPoly& p);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder of Euclidean division; throws kDivisionByZero
  /// for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly monic() const;

  Scalar evaluate(const Scalar& x) const;
  /// this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(std::uint32_t exponent) const;

 private:
  void check_field(const UniPoly& rhs) const;

  Field field_;
  Terms terms_;
};

/// Formal derivative; in characteristic p the terms with p | exponent vanish.
UniPoly derivative(const UniPoly& f);

/// Monic gcd over the coefficient field; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace birat
