#include "birat/coeff.hpp"

#include <charconv>

namespace birat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kAllZero: return "AllZero";
    case ErrorCode::kAllZeroGenerators: return "AllZeroGenerators";
    case ErrorCode::kWrongArity: return "WrongArity";
    case ErrorCode::kConstantInput: return "ConstantInput";
    case ErrorCode::kDegenerateImage: return "DegenerateImage";
    case ErrorCode::kSyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) {
    throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  return Rational(mpq_class(1 / value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

// ------------------------------------------------------------ PrimeElement

PrimeElement::PrimeElement(std::uint32_t value, std::uint32_t modulus)
    : value_(value % modulus), modulus_(modulus) {}

void PrimeElement::check_same_field(const PrimeElement& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw Error(ErrorCode::kFieldMismatch, "elements of different prime fields");
  }
}

PrimeElement PrimeElement::inverse() const {
  if (value_ == 0) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  // Extended Euclid on signed 64-bit values; p < 2^31 keeps everything small.
  std::int64_t r0 = modulus_, r1 = value_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s0 < 0) s0 += modulus_;
  return PrimeElement(static_cast<std::uint32_t>(s0), modulus_);
}

PrimeElement PrimeElement::operator-() const {
  return PrimeElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

PrimeElement& PrimeElement::operator+=(const PrimeElement& rhs) {
  check_same_field(rhs);
  const std::uint64_t sum = std::uint64_t{value_} + rhs.value_;
  value_ = static_cast<std::uint32_t>(sum % modulus_);
  return *this;
}

PrimeElement& PrimeElement::operator-=(const PrimeElement& rhs) {
  check_same_field(rhs);
  const std::uint64_t diff = std::uint64_t{value_} + modulus_ - rhs.value_;
  value_ = static_cast<std::uint32_t>(diff % modulus_);
  return *this;
}

PrimeElement& PrimeElement::operator*=(const PrimeElement& rhs) {
  check_same_field(rhs);
  const std::uint64_t prod = std::uint64_t{value_} * rhs.value_;
  value_ = static_cast<std::uint32_t>(prod % modulus_);
  return *this;
}

PrimeElement& PrimeElement::operator/=(const PrimeElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

// ------------------------------------------------------------------ Field

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;  // operands < 2^32
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1u;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Witnesses {2, 3, 5, 7} are exact below 3,215,031,751 > 2^31; 11 and 13
  // extend that past 2^32.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw Error(ErrorCode::kOutOfRange,
                "prime modulus must satisfy 2 <= p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime(static_cast<std::uint32_t>(p))) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  return Field(Kind::kPrime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    const std::string_view digits = text.substr(1);
    std::int64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorCode::kOutOfRange, "prime modulus out of range: " + std::string(text));
    }
    if (ec == std::errc() && ptr == digits.data() + digits.size() && digits.front() != '-' &&
        digits.front() != '+') {
      return prime(p);
    }
  }
  throw Error(ErrorCode::kSyntaxError,
              "unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(modulus_);
}

// ----------------------------------------------------------------- Scalar

namespace {

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(const Field& field, const mpz_class& value)
    : value_(field.is_rational()
                 ? decltype(value_)(Rational(value))
                 : decltype(value_)(PrimeElement(reduce_mod(value, field.characteristic()),
                                                 field.characteristic()))) {}

Scalar::Scalar(const Field& field, const Rational& value) : value_(Rational()) {
  if (field.is_rational()) {
    value_ = value;
    return;
  }
  const std::uint32_t p = field.characteristic();
  const PrimeElement den(reduce_mod(value.denominator(), p), p);
  if (den.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero,
                "denominator " + value.denominator().get_str() + " vanishes in " +
                    field.to_string());
  }
  value_ = PrimeElement(reduce_mod(value.numerator(), p), p) / den;
}

Field Scalar::field() const {
  if (std::holds_alternative<Rational>(value_)) return Field::rationals();
  return Field(Field::Kind::kPrime, std::get<PrimeElement>(value_).modulus());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& v) { return v.is_one(); }, value_);
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& v) { return Scalar(v.inverse()); }, value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

namespace {

template <typename Op>
void apply_binary(std::variant<Rational, PrimeElement>& lhs,
                  const std::variant<Rational, PrimeElement>& rhs, Op op) {
  if (lhs.index() != rhs.index()) {
    throw Error(ErrorCode::kFieldMismatch, "mixing rational and prime-field scalars");
  }
  if (auto* r = std::get_if<Rational>(&lhs)) {
    op(*r, std::get<Rational>(rhs));
  } else {
    op(std::get<PrimeElement>(lhs), std::get<PrimeElement>(rhs));
  }
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) {
  apply_binary(value_, rhs.value_, [](auto& a, const auto& b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  apply_binary(value_, rhs.value_, [](auto& a, const auto& b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  apply_binary(value_, rhs.value_, [](auto& a, const auto& b) { a *= b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  apply_binary(value_, rhs.value_, [](auto& a, const auto& b) { a /= b; });
  return *this;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  return std::to_string(std::get<PrimeElement>(value_).value());
}

}  // namespace birat
