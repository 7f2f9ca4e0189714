#include "birat/format.hpp"

#include <vector>

namespace birat {
namespace {

// Appends "c*m" with the sign folded into the separator.
void append_term(std::string& out, const Scalar& c, const std::string& monomial) {
  std::string coeff = c.to_string();
  bool negative = !coeff.empty() && coeff.front() == '-';
  if (negative) coeff.erase(0, 1);

  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += coeff;
  } else if (coeff == "1") {
    out += monomial;
  } else {
    out += coeff + "*" + monomial;
  }
}

std::string power(char variable, std::uint32_t exp) {
  if (exp == 0) return {};
  std::string out(1, variable);
  if (exp > 1) out += "^" + std::to_string(exp);
  return out;
}

}  // namespace

std::string format_poly(const UniPoly& p, char variable, FormatStyle style) {
  if (p.is_zero()) return "0";
  UniPoly q = p;
  if (style == FormatStyle::kMonic) {
    q = p.monic();
  } else if (style == FormatStyle::kIntegerPrimitive) {
    q = substitute_diagonal(primitive_form(BiPoly::from_t(p), TermOrder::degrevlex()));
  }
  std::string out;
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
    append_term(out, it->second, power(variable, it->first));
  }
  return out;
}

std::string format_poly(const BiPoly& p, const TermOrder& order, FormatStyle style) {
  if (p.is_zero()) return "0";
  BiPoly q = p;
  if (style == FormatStyle::kMonic) {
    q = p.monic(order);
  } else if (style == FormatStyle::kIntegerPrimitive) {
    q = primitive_form(p, order);
  }
  std::string out;
  for (const auto& term : q.sorted_terms(order)) {
    append_term(out, term.coefficient,
                term.monomial.is_one() ? std::string() : to_string(term.monomial));
  }
  return out;
}

}  // namespace birat
