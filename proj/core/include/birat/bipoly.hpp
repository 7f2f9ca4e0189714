#pragma once

#include <map>
#include <vector>

#include "birat/coeff.hpp"
#include "birat/monomial.hpp"
#include "birat/unipoly.hpp"

namespace birat {

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in k[s,t]. Terms are kept in a canonical storage order
/// so that equality is structural; term-order views are produced on demand.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit BiPoly(Field field) : field_(field) {}

  static BiPoly constant(const Scalar& c);
  static BiPoly monomial(const Scalar& c, const Monomial& m);
  static BiPoly s(Field field);
  static BiPoly t(Field field);
  /// f(t) and f(s) respectively.
  static BiPoly from_t(const UniPoly& f);
  static BiPoly from_s(const UniPoly& f);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  /// Throws kZeroPolynomial for the zero polynomial.
  Term leading_term(const TermOrder& order) const;
  /// Terms in decreasing term order.
  std::vector<Term> sorted_terms(const TermOrder& order) const;
  /// Divides by the leading coefficient; zero stays zero.
  BiPoly monic(const TermOrder& order) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Scalar& c, const BiPoly& p);

  /// c * m * this.
  BiPoly monomial_mul(const Scalar& c, const Monomial& m) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void check_field(const BiPoly& rhs) const;

  Field field_;
  Terms terms_;
};

/// g(s,t) with (t - s) * g = f(t) - f(s), expanded term by term through
/// (t^j - s^j)/(t - s) = sum_{a+b=j-1} t^a s^b.
BiPoly divided_difference(const UniPoly& f);

/// g(s, s) as a univariate polynomial in the remaining variable.
UniPoly substitute_diagonal(const BiPoly& g);

/// Scalar-normalized display form. Over Q: integer coefficients with
/// content 1 and positive leading coefficient. Over F_p: monic.
BiPoly primitive_form(const BiPoly& g, const TermOrder& order);

}  // namespace birat
