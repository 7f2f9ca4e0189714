#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "birat/error.hpp"

namespace birat {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// Residue in [0, p) for a prime modulus p < 2^31.
class PrimeElement {
 public:
  PrimeElement(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  PrimeElement inverse() const;

  PrimeElement operator-() const;
  PrimeElement& operator+=(const PrimeElement& rhs);
  PrimeElement& operator-=(const PrimeElement& rhs);
  PrimeElement& operator*=(const PrimeElement& rhs);
  PrimeElement& operator/=(const PrimeElement& rhs);

  friend PrimeElement operator+(PrimeElement a, const PrimeElement& b) { return a += b; }
  friend PrimeElement operator-(PrimeElement a, const PrimeElement& b) { return a -= b; }
  friend PrimeElement operator*(PrimeElement a, const PrimeElement& b) { return a *= b; }
  friend PrimeElement operator/(PrimeElement a, const PrimeElement& b) { return a /= b; }

  friend bool operator==(const PrimeElement&, const PrimeElement&) = default;

 private:
  void check_same_field(const PrimeElement& rhs) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Deterministic Miller-Rabin; exact for every n < 2^32.
bool is_prime(std::uint32_t n);

/// Descriptor for the coefficient field: either Q or F_p.
class Field {
 public:
  enum class Kind { kRational, kPrime };

  static constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

  static Field rationals() { return Field(Kind::kRational, 0); }
  /// Throws kOutOfRange unless 2 <= p < 2^31, kNotPrime for composite p.
  static Field prime(std::int64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F101").
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::kRational; }
  // 0 for Q.
  std::uint32_t characteristic() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

/// A field element of either kind. All polynomial code is written against
/// this type; mixing elements of different fields throws kFieldMismatch.
class Scalar {
 public:
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);
  /// Maps a rational into the field; throws kDivisionByZero when the
  /// denominator vanishes there.
  Scalar(const Field& field, const Rational& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  // Valid only for the corresponding field kind.
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const PrimeElement& as_prime() const { return std::get<PrimeElement>(value_); }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string to_string() const;

 private:
  explicit Scalar(Rational value) : value_(std::move(value)) {}
  explicit Scalar(PrimeElement value) : value_(value) {}

  std::variant<Rational, PrimeElement> value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const Scalar& c) {
  return os << c.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const Field& f) {
  return os << f.to_string();
}

}  // namespace birat
