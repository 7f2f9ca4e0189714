#include "birat/monomial.hpp"

namespace birat {

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  auto append = [&out](char var, std::uint32_t exp) {
    if (exp == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (exp > 1) out += '^' + std::to_string(exp);
  };
  append('t', m.exp_t);
  append('s', m.exp_s);
  return out;
}

std::optional<TermOrder> TermOrder::parse(std::string_view name) {
  if (name == "degrevlex") return degrevlex();
  if (name == "lex") return lex();
  return std::nullopt;
}

std::string to_string(const TermOrder& order) {
  std::string out = order.kind == TermOrder::Kind::kDegRevLex ? "degrevlex" : "lex";
  out += order.smaller == Variable::kS ? " (s < t)" : " (t < s)";
  return out;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const TermOrder& order) {
  const bool s_small = order.smaller == Variable::kS;
  const std::uint32_t a_big = s_small ? a.exp_t : a.exp_s;
  const std::uint32_t b_big = s_small ? b.exp_t : b.exp_s;
  const std::uint32_t a_small = s_small ? a.exp_s : a.exp_t;
  const std::uint32_t b_small = s_small ? b.exp_s : b.exp_t;

  if (order.kind == TermOrder::Kind::kLex) {
    if (a_big != b_big) return a_big <=> b_big;
    return a_small <=> b_small;
  }
  if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
  // Reverse-lex tie break: the smaller exponent in the smallest variable wins.
  return b_small <=> a_small;
}

}  // namespace birat
