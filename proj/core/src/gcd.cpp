#include "birat/gcd.hpp"

#include <utility>
#include <vector>

namespace birat {
namespace {

// Recursive view: coefficient i is the k[s]-coefficient of t^i.
// The vector is trimmed so that the last entry is nonzero.
using RecPoly = std::vector<UniPoly>;

RecPoly to_recursive(const BiPoly& p) {
  RecPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (out.size() <= m.exp_t) out.resize(m.exp_t + 1, UniPoly(p.field()));
    out[m.exp_t].add_term(m.exp_s, c);
  }
  return out;
}

BiPoly from_recursive(const RecPoly& r, const Field& field) {
  BiPoly out(field);
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    for (const auto& [e, c] : r[i].terms()) out.add_term(Monomial{e, i}, c);
  }
  return out;
}

void trim(RecPoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

UniPoly content(const RecPoly& r, const Field& field) {
  UniPoly g(field);
  for (const auto& c : r) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

RecPoly divide_coefficients(const RecPoly& r, const UniPoly& d) {
  RecPoly out;
  out.reserve(r.size());
  for (const auto& c : r) out.push_back(c.divmod(d).first);
  return out;
}

RecPoly primitive_part(const RecPoly& r, const Field& field) {
  return divide_coefficients(r, content(r, field));
}

// lc(b)^(deg a - deg b + 1) * a = q * b + rem; returns rem.
RecPoly pseudo_remainder(RecPoly a, const RecPoly& b) {
  const std::size_t db = b.size() - 1;
  const UniPoly& lc_b = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UniPoly lc_a = a.back();
    for (auto& c : a) c = c * lc_b;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lc_a * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

BiPoly bivariate_gcd(std::span<const BiPoly> polys) {
  const BiPoly* first = nullptr;
  for (const auto& p : polys) {
    if (!p.is_zero()) {
      first = &p;
      break;
    }
  }
  if (first == nullptr) {
    throw Error(ErrorCode::kAllZero, "gcd of an all-zero list");
  }
  const Field field = first->field();

  RecPoly acc = to_recursive(*first);
  UniPoly acc_content = content(acc, field);
  acc = divide_coefficients(acc, acc_content);

  for (const auto& p : polys) {
    if (p.is_zero() || &p == first) continue;
    if (p.field() != field) {
      throw Error(ErrorCode::kFieldMismatch, "gcd inputs over different fields");
    }
    RecPoly b = to_recursive(p);
    const UniPoly b_content = content(b, field);
    b = divide_coefficients(b, b_content);
    acc_content = gcd(acc_content, b_content);

    RecPoly a = std::move(acc);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
      RecPoly r = pseudo_remainder(std::move(a), b);
      a = std::move(b);
      b = r.empty() ? RecPoly{} : primitive_part(r, field);
      if (b.empty()) break;
    }
    // b is empty (a is the gcd) or has t-degree 0 (the primitive gcd is 1).
    acc = b.empty() ? std::move(a) : RecPoly{UniPoly::constant(Scalar::one(field))};
    if (acc.size() == 1) acc = RecPoly{UniPoly::constant(Scalar::one(field))};
  }

  for (auto& c : acc) c = c * acc_content;
  BiPoly result = from_recursive(acc, field);
  if (result.is_constant()) return BiPoly::constant(Scalar::one(field));
  const Scalar lead = to_recursive(result).back().leading_coefficient();
  return lead.inverse() * result;
}

bool divides(const BiPoly& divisor, const BiPoly& dividend) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  }
  if (dividend.is_zero()) return true;
  // Division by a single polynomial w.r.t. lex (t > s) leaves remainder 0
  // exactly when the divisor divides the dividend.
  const TermOrder order = TermOrder::lex(Variable::kS);
  const Term lead = divisor.leading_term(order);
  const Scalar lead_inv = lead.coefficient.inverse();
  BiPoly rem = dividend;
  while (!rem.is_zero()) {
    const Term lt = rem.leading_term(order);
    if (!lead.monomial.divides(lt.monomial)) return false;
    rem -= divisor.monomial_mul(lt.coefficient * lead_inv, lt.monomial / lead.monomial);
  }
  return true;
}

}  // namespace birat
