#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace birat {

/// s^exp_s * t^exp_t.
struct Monomial {
  std::uint32_t exp_s = 0;
  std::uint32_t exp_t = 0;

  std::uint32_t total_degree() const { return exp_s + exp_t; }
  bool is_one() const { return exp_s == 0 && exp_t == 0; }
  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const {
    return exp_s <= other.exp_s && exp_t <= other.exp_t;
  }
  /// Pure power of s (including 1).
  bool is_pure_s() const { return exp_t == 0; }
  /// Pure power of t (including 1).
  bool is_pure_t() const { return exp_s == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exp_s + b.exp_s, a.exp_t + b.exp_t};
  }
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.exp_s - b.exp_s, a.exp_t - b.exp_t};
  }

  // Storage order only (t-exponent, then s-exponent); it is not a term order.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exp_t != b.exp_t ? a.exp_t < b.exp_t : a.exp_s < b.exp_s;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.exp_s, b.exp_s), std::max(a.exp_t, b.exp_t)};
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  return {std::min(a.exp_s, b.exp_s), std::min(a.exp_t, b.exp_t)};
}

/// Renders "t^2*s", "s", "1", ...
std::string to_string(const Monomial& m);

enum class Variable { kS, kT };

/// Admissible monomial order on k[s,t]. `smaller` names the smaller variable.
struct TermOrder {
  enum class Kind { kDegRevLex, kLex };

  Kind kind = Kind::kDegRevLex;
  Variable smaller = Variable::kS;

  static TermOrder degrevlex(Variable smaller = Variable::kS) {
    return {Kind::kDegRevLex, smaller};
  }
  static TermOrder lex(Variable smaller = Variable::kS) { return {Kind::kLex, smaller}; }

  /// Accepts "degrevlex" or "lex" (s < t in both).
  static std::optional<TermOrder> parse(std::string_view name);

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

std::string to_string(const TermOrder& order);

/// Total, multiplicative, 1 minimal.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const TermOrder& order);

/// Strict-weak-ordering adaptor: true when a precedes b in the term order.
struct TermOrderLess {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order) < 0;
  }
};

}  // namespace birat
