#include "birat/groebner.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace birat {
namespace {

// Terms in decreasing term order; the working representation of the engine.
using Sorted = std::vector<Term>;

Sorted to_sorted(const BiPoly& p, const TermOrder& order) { return p.sorted_terms(order); }

BiPoly to_bipoly(const Sorted& terms, const Field& field) {
  BiPoly out(field);
  for (const auto& term : terms) out.add_term(term.monomial, term.coefficient);
  return out;
}

// Returns p[from..] - c * m * q as a fresh sorted term list.
Sorted sub_scaled(const Sorted& p, std::size_t from, const Scalar& c, const Monomial& m,
                  const Sorted& q, const TermOrder& order) {
  Sorted out;
  out.reserve(p.size() - from + q.size());
  std::size_t i = from, j = 0;
  while (i < p.size() && j < q.size()) {
    const Monomial qm = q[j].monomial * m;
    const auto cmp = compare_monomials(p[i].monomial, qm, order);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({qm, -(c * q[j].coefficient)});
      ++j;
    } else {
      Scalar coeff = p[i].coefficient - c * q[j].coefficient;
      if (!coeff.is_zero()) out.push_back({qm, std::move(coeff)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < q.size(); ++j) out.push_back({q[j].monomial * m, -(c * q[j].coefficient)});
  return out;
}

struct Reducer {
  Sorted terms;
  Scalar lead_inv;
};

Reducer make_reducer(Sorted terms) {
  Scalar inv = terms.front().coefficient.inverse();
  return {std::move(terms), std::move(inv)};
}

// Full reduction of `p`. `on_step(index, coeff, monomial)` observes every
// reduction step so callers can accumulate quotients.
template <typename OnStep>
Sorted reduce_sorted(Sorted p, const std::vector<Reducer>& reducers, const TermOrder& order,
                     OnStep on_step) {
  Sorted rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    std::size_t k = 0;
    for (; k < reducers.size(); ++k) {
      if (reducers[k].terms.front().monomial.divides(lt.monomial)) break;
    }
    if (k == reducers.size()) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Reducer& r = reducers[k];
    const Scalar c = lt.coefficient * r.lead_inv;
    const Monomial m = lt.monomial / r.terms.front().monomial;
    on_step(k, c, m);
    p = sub_scaled(p, pos, c, m, r.terms, order);
    pos = 0;
  }
  return rem;
}

Sorted make_monic(Sorted p) {
  if (p.empty() || p.front().coefficient.is_one()) return p;
  const Scalar inv = p.front().coefficient.inverse();
  for (auto& term : p) term.coefficient *= inv;
  return p;
}

bool is_nonzero_constant(const Sorted& p) {
  return p.size() == 1 && p.front().monomial.is_one();
}

GroebnerBasis unit_basis(const Field& field, const TermOrder& order, bool reduced) {
  return {{BiPoly::constant(Scalar::one(field))}, order, reduced};
}

Sorted s_poly_sorted(const Sorted& f, const Sorted& g, const TermOrder& order) {
  const Monomial l = lcm(f.front().monomial, g.front().monomial);
  const Scalar& cf = f.front().coefficient;
  const Scalar& cg = g.front().coefficient;
  // (L/lt f) f - (L/lt g) g, written as u*f - v*g with monic-normalized factors.
  Sorted uf;
  uf.reserve(f.size());
  const Monomial mf = l / f.front().monomial;
  const Scalar inv_f = cf.inverse();
  for (const auto& term : f) uf.push_back({term.monomial * mf, term.coefficient * inv_f});
  return sub_scaled(uf, 0, cg.inverse(), l / g.front().monomial, g, order);
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading_term(order).monomial);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements.front().is_constant() &&
         !elements.front().is_zero();
}

NormalForm normal_form(const BiPoly& f, std::span<const BiPoly> reducers,
                       const TermOrder& order) {
  std::vector<Reducer> rs;
  rs.reserve(reducers.size());
  for (const auto& r : reducers) {
    if (r.field() != f.field()) {
      throw Error(ErrorCode::kFieldMismatch, "reducer over a different field");
    }
    if (r.is_zero()) {
      throw Error(ErrorCode::kZeroPolynomial, "zero polynomial in the reducer list");
    }
    rs.push_back(make_reducer(to_sorted(r, order)));
  }
  std::vector<BiPoly> quotients(reducers.size(), BiPoly(f.field()));
  Sorted rem = reduce_sorted(to_sorted(f, order), rs, order,
                             [&quotients](std::size_t k, const Scalar& c, const Monomial& m) {
                               quotients[k].add_term(m, c);
                             });
  return {to_bipoly(rem, f.field()), std::move(quotients)};
}

BiPoly reduce(const BiPoly& f, std::span<const BiPoly> reducers, const TermOrder& order) {
  std::vector<Reducer> rs;
  rs.reserve(reducers.size());
  for (const auto& r : reducers) {
    if (r.is_zero()) {
      throw Error(ErrorCode::kZeroPolynomial, "zero polynomial in the reducer list");
    }
    rs.push_back(make_reducer(to_sorted(r, order)));
  }
  Sorted rem = reduce_sorted(to_sorted(f, order), rs, order,
                             [](std::size_t, const Scalar&, const Monomial&) {});
  return to_bipoly(rem, f.field());
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, const TermOrder& order) {
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "S-polynomial of the zero polynomial");
  }
  if (f.field() != g.field()) {
    throw Error(ErrorCode::kFieldMismatch, "S-polynomial of polynomials over different fields");
  }
  const Term lf = f.leading_term(order);
  const Term lg = g.leading_term(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return f.monomial_mul(lf.coefficient.inverse(), l / lf.monomial) -
         g.monomial_mul(lg.coefficient.inverse(), l / lg.monomial);
}

GroebnerBasis buchberger(const IdealSpec& ideal) {
  const TermOrder& order = ideal.order;
  std::vector<Reducer> basis;
  std::optional<Field> field;

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (field && g.field() != *field) {
      throw Error(ErrorCode::kFieldMismatch, "ideal generators over different fields");
    }
    field = g.field();
    Sorted terms = make_monic(to_sorted(g, order));
    if (is_nonzero_constant(terms)) return unit_basis(*field, order, false);
    basis.push_back(make_reducer(std::move(terms)));
  }
  if (basis.empty()) {
    throw Error(ErrorCode::kAllZeroGenerators, "ideal has no nonzero generator");
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  // pending_flag[j][i] (i < j) mirrors membership in `pending`.
  std::vector<std::vector<char>> pending_flag;

  auto lead = [&basis](std::size_t k) -> const Monomial& {
    return basis[k].terms.front().monomial;
  };
  auto add_pairs_for = [&](std::size_t j) {
    pending_flag.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(lead(i), lead(j))});
      pending_flag[j][i] = 1;
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending_flag[b][a] != 0 : pending_flag[a][b] != 0;
  };

  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    // Normal strategy: smallest lcm by total degree, then by the term order.
    auto best = std::min_element(pending.begin(), pending.end(),
                                 [&order](const Pair& a, const Pair& b) {
                                   if (a.lcm.total_degree() != b.lcm.total_degree()) {
                                     return a.lcm.total_degree() < b.lcm.total_degree();
                                   }
                                   const auto c = compare_monomials(a.lcm, b.lcm, order);
                                   if (c != 0) return c < 0;
                                   return std::tie(a.j, a.i) < std::tie(b.j, b.i);
                                 });
    const Pair pair = *best;
    pending.erase(best);
    pending_flag[pair.j][pair.i] = 0;

    if (gcd(lead(pair.i), lead(pair.j)).is_one()) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = lead(k).divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    Sorted h = reduce_sorted(s_poly_sorted(basis[pair.i].terms, basis[pair.j].terms, order),
                             basis, order, [](std::size_t, const Scalar&, const Monomial&) {});
    if (h.empty()) continue;
    if (is_nonzero_constant(h)) return unit_basis(*field, order, false);
    basis.push_back(make_reducer(make_monic(std::move(h))));
    add_pairs_for(basis.size() - 1);
  }

  GroebnerBasis out{{}, order, false};
  out.elements.reserve(basis.size());
  for (const auto& r : basis) out.elements.push_back(to_bipoly(r.terms, *field));
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const TermOrder& order = basis.order;
  std::vector<Sorted> polys;
  for (const auto& e : basis.elements) {
    if (!e.is_zero()) polys.push_back(make_monic(to_sorted(e, order)));
  }
  if (polys.empty()) {
    throw Error(ErrorCode::kAllZeroGenerators, "basis has no nonzero element");
  }
  const Field field = basis.elements.front().field();

  std::stable_sort(polys.begin(), polys.end(), [&order](const Sorted& a, const Sorted& b) {
    return compare_monomials(a.front().monomial, b.front().monomial, order) < 0;
  });

  // Minimalize: after sorting, a lead can only be divisible by an earlier one.
  std::vector<Sorted> minimal;
  for (auto& p : polys) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&p](const Sorted& q) {
      return q.front().monomial.divides(p.front().monomial);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  if (is_nonzero_constant(minimal.front())) return unit_basis(field, order, true);

  GroebnerBasis out{{}, order, true};
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Reducer> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back(make_reducer(minimal[m]));
    }
    Sorted tail(minimal[k].begin() + 1, minimal[k].end());
    Sorted reduced_tail = reduce_sorted(std::move(tail), others, order,
                                        [](std::size_t, const Scalar&, const Monomial&) {});
    Sorted full;
    full.reserve(reduced_tail.size() + 1);
    full.push_back(minimal[k].front());
    full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
    out.elements.push_back(to_bipoly(full, field));
  }
  return out;
}

GroebnerBasis reduced_groebner_basis(const IdealSpec& ideal) {
  return reduce_basis(buchberger(ideal));
}

bool satisfies_buchberger_criterion(std::span<const BiPoly> elements, const TermOrder& order) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!reduce(s_polynomial(elements[i], elements[j], order), elements, order).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Staircase staircase_dimension(const GroebnerBasis& basis) {
  const std::vector<Monomial> leads = basis.leading_monomials();
  std::optional<std::uint32_t> s_bound, t_bound;
  for (const auto& m : leads) {
    if (m.is_pure_s() && (!s_bound || m.exp_s < *s_bound)) s_bound = m.exp_s;
    if (m.is_pure_t() && (!t_bound || m.exp_t < *t_bound)) t_bound = m.exp_t;
  }
  if (!s_bound || !t_bound) return {std::nullopt};

  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < *s_bound; ++a) {
    for (std::uint32_t b = 0; b < *t_bound; ++b) {
      const Monomial m{a, b};
      const bool standard = std::none_of(leads.begin(), leads.end(),
                                         [&m](const Monomial& l) { return l.divides(m); });
      if (standard) ++count;
    }
  }
  return {count};
}

}  // namespace birat
