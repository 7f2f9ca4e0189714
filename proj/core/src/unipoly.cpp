#include "birat/unipoly.hpp"

#include <string>

namespace birat {

std::uint32_t Degree::value() const {
  if (!finite_) {
    throw Error(ErrorCode::kZeroPolynomial, "degree of the zero polynomial is -infinity");
  }
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_neg_infinity()) return os << "-inf";
  return os << d.value();
}

UniPoly::UniPoly(Field field, std::initializer_list<std::pair<std::uint32_t, long>> terms)
    : field_(field) {
  for (const auto& [e, c] : terms) add_term(e, Scalar(field_, c));
}

UniPoly UniPoly::constant(const Scalar& c) { return monomial(c, 0); }

UniPoly UniPoly::monomial(const Scalar& c, std::uint32_t exponent) {
  UniPoly p(c.field());
  p.add_term(exponent, c);
  return p;
}

UniPoly UniPoly::variable(Field field) { return monomial(Scalar::one(field), 1); }

bool UniPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Degree UniPoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(terms_.rbegin()->first);
}

Scalar UniPoly::coefficient(std::uint32_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const Scalar& UniPoly::leading_coefficient() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of the zero polynomial");
  }
  return terms_.rbegin()->second;
}

void UniPoly::add_term(std::uint32_t exponent, const Scalar& c) {
  if (c.field() != field_) {
    throw Error(ErrorCode::kFieldMismatch, "coefficient from " + c.field().to_string() +
                                               " added to polynomial over " + field_.to_string());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UniPoly::check_field(const UniPoly& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over " + field_.to_string() + " and " +
                                               rhs.field_.to_string());
  }
}

UniPoly UniPoly::operator-() const {
  UniPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  check_field(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  check_field(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_field(b);
  UniPoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

UniPoly operator*(const Scalar& c, const UniPoly& p) {
  UniPoly out(p.field_);
  for (const auto& [e, pc] : p.terms_) out.add_term(e, c * pc);
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  check_field(divisor);
  if (divisor.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  UniPoly quotient(field_);
  UniPoly remainder = *this;
  const std::uint32_t dd = divisor.degree().value();
  const Scalar lc_inv = divisor.leading_coefficient().inverse();
  while (!remainder.is_zero() && remainder.degree().value() >= dd) {
    const std::uint32_t shift = remainder.degree().value() - dd;
    const Scalar factor = remainder.leading_coefficient() * lc_inv;
    quotient.add_term(shift, factor);
    for (const auto& [e, c] : divisor.terms_) remainder.add_term(e + shift, -(factor * c));
  }
  return {std::move(quotient), std::move(remainder)};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return leading_coefficient().inverse() * *this;
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  std::uint32_t prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (std::uint32_t i = it->first; i < prev; ++i) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (std::uint32_t i = 0; i < prev; ++i) acc *= x;
  return acc;
}

UniPoly UniPoly::pow(std::uint32_t exponent) const {
  UniPoly result = constant(Scalar::one(field_));
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  check_field(inner);
  // Horner in the outer polynomial.
  UniPoly acc(field_);
  std::uint32_t prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev > it->first) acc = acc * inner.pow(prev - it->first);
    acc += constant(it->second);
    prev = it->first;
  }
  if (prev > 0) acc = acc * inner.pow(prev);
  return acc;
}

UniPoly derivative(const UniPoly& f) {
  UniPoly out(f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e == 0) continue;
    out.add_term(e - 1, Scalar(f.field(), static_cast<long>(e)) * c);
  }
  return out;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace birat
