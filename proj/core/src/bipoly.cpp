#include "birat/bipoly.hpp"

#include <algorithm>

namespace birat {

BiPoly BiPoly::constant(const Scalar& c) { return monomial(c, Monomial{}); }

BiPoly BiPoly::monomial(const Scalar& c, const Monomial& m) {
  BiPoly p(c.field());
  p.add_term(m, c);
  return p;
}

BiPoly BiPoly::s(Field field) { return monomial(Scalar::one(field), {1, 0}); }
BiPoly BiPoly::t(Field field) { return monomial(Scalar::one(field), {0, 1}); }

BiPoly BiPoly::from_t(const UniPoly& f) {
  BiPoly p(f.field());
  for (const auto& [e, c] : f.terms()) p.terms_.emplace(Monomial{0, e}, c);
  return p;
}

BiPoly BiPoly::from_s(const UniPoly& f) {
  BiPoly p(f.field());
  for (const auto& [e, c] : f.terms()) p.terms_.emplace(Monomial{e, 0}, c);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar BiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void BiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.field() != field_) {
    throw Error(ErrorCode::kFieldMismatch, "coefficient from " + c.field().to_string() +
                                               " added to polynomial over " + field_.to_string());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Term BiPoly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) {
    throw Error(ErrorCode::kZeroPolynomial, "leading term of the zero polynomial");
  }
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return {best->first, best->second};
}

std::vector<Term> BiPoly::sorted_terms(const TermOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [&order](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial, order) > 0;
  });
  return out;
}

BiPoly BiPoly::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  return leading_term(order).coefficient.inverse() * *this;
}

void BiPoly::check_field(const BiPoly& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over " + field_.to_string() + " and " +
                                               rhs.field_.to_string());
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  check_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  check_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  a.check_field(b);
  BiPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

BiPoly operator*(const Scalar& c, const BiPoly& p) {
  BiPoly out(p.field_);
  if (c.field() != p.field_) {
    throw Error(ErrorCode::kFieldMismatch, "scalar and polynomial over different fields");
  }
  if (c.is_zero()) return out;
  for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
  return out;
}

BiPoly BiPoly::monomial_mul(const Scalar& c, const Monomial& m) const {
  if (c.field() != field_) {
    throw Error(ErrorCode::kFieldMismatch, "scalar and polynomial over different fields");
  }
  BiPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [pm, pc] : terms_) out.terms_.emplace(pm * m, c * pc);
  return out;
}

BiPoly divided_difference(const UniPoly& f) {
  BiPoly g(f.field());
  for (const auto& [j, c] : f.terms()) {
    for (std::uint32_t a = 0; a < j; ++a) g.add_term(Monomial{j - 1 - a, a}, c);
  }
  return g;
}

UniPoly substitute_diagonal(const BiPoly& g) {
  UniPoly out(g.field());
  for (const auto& [m, c] : g.terms()) out.add_term(m.total_degree(), c);
  return out;
}

BiPoly primitive_form(const BiPoly& g, const TermOrder& order) {
  if (g.is_zero()) return g;
  if (!g.field().is_rational()) return g.monic(order);

  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : g.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.as_rational().denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.as_rational().numerator().get_mpz_t());
  }
  // Scaling by lcm(dens)/gcd(nums) yields integer coefficients with content 1.
  Rational scale(den_lcm, num_gcd);
  if (g.leading_term(order).coefficient.as_rational().sign() < 0) scale = -scale;
  return Scalar(g.field(), scale) * g;
}

}  // namespace birat
