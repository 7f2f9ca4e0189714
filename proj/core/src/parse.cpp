#include "birat/parse.hpp"

#include <cctype>
#include <string>

namespace birat {
namespace {

constexpr int kMaxNesting = 256;

class Parser {
 public:
  Parser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  UniPoly parse() {
    UniPoly result = expr(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    fail_at(pos_, message);
  }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw SyntaxError(offset, message + " at offset " + std::to_string(offset));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  UniPoly expr(int depth) {
    if (depth > kMaxNesting) fail("parentheses nested too deeply");
    bool negate = false;
    if (peek('-') || peek('+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    UniPoly acc = term(depth);
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      UniPoly rhs = term(depth);
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  UniPoly term(int depth) {
    UniPoly acc = factor(depth);
    while (peek('*')) {
      ++pos_;
      const std::size_t at = pos_;
      UniPoly rhs = factor(depth);
      if (!acc.is_zero() && !rhs.is_zero() &&
          std::uint64_t{acc.degree().value()} + rhs.degree().value() > kMaxParsedDegree) {
        fail_at(at, "degree limit exceeded");
      }
      acc = acc * rhs;
    }
    return acc;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  UniPoly factor(int depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      UniPoly inner = expr(depth + 1);
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 't') {
      ++pos_;
      std::uint32_t exponent = 1;
      if (peek('^')) {
        ++pos_;
        if (!at_digit()) fail("expected exponent");
        const std::size_t at = pos_;
        const mpz_class e = integer();
        if (e > kMaxParsedDegree) fail_at(at, "degree limit exceeded");
        exponent = static_cast<std::uint32_t>(e.get_ui());
      }
      return UniPoly::monomial(Scalar::one(field_), exponent);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = integer();
      if (peek('/')) {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (sgn(den) == 0) {
          throw Error(ErrorCode::kDivisionByZero,
                      "zero denominator at offset " + std::to_string(at));
        }
        return UniPoly::constant(Scalar(field_, Rational(num, den)));
      }
      return UniPoly::constant(Scalar(field_, num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      fail("unknown variable '" + std::string(1, c) + "' (only t is allowed)");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_poly(std::string_view text, const Field& field) {
  return Parser(text, field).parse();
}

}  // namespace birat
