#include "birat/decide.hpp"

#include <algorithm>
#include <numeric>

namespace birat {

ProblemInstance::ProblemInstance(std::vector<UniPoly> polys, TermOrder order)
    : polys_(std::move(polys)),
      field_(polys_.empty() ? Field::rationals() : polys_.front().field()),
      order_(order) {
  if (polys_.empty()) {
    throw Error(ErrorCode::kAllZero, "a parametrization needs at least one polynomial");
  }
  for (const auto& f : polys_) {
    if (f.field() != field_) {
      throw Error(ErrorCode::kFieldMismatch, "parametrization mixes " + field_.to_string() +
                                                 " and " + f.field().to_string());
    }
  }
}

std::vector<BiPoly> ProblemInstance::divided_differences() const {
  std::vector<BiPoly> out;
  out.reserve(polys_.size());
  for (const auto& f : polys_) out.push_back(divided_difference(f));
  return out;
}

const char* to_string(Guard guard) {
  switch (guard) {
    case Guard::kPass: return "PASS";
    case Guard::kDegenerateImage: return "DEGENERATE_IMAGE";
    case Guard::kInseparable: return "INSEPARABLE";
  }
  return "?";
}

Guard check_preconditions(const ProblemInstance& inst) {
  const auto& polys = inst.polys();
  if (std::all_of(polys.begin(), polys.end(), [](const UniPoly& f) { return f.is_constant(); })) {
    return Guard::kDegenerateImage;
  }
  if (std::all_of(polys.begin(), polys.end(),
                  [](const UniPoly& f) { return derivative(f).is_zero(); })) {
    return Guard::kInseparable;
  }
  return Guard::kPass;
}

namespace {

bool has_pure_powers(const GroebnerBasis& basis) {
  const auto leads = basis.leading_monomials();
  const bool pure_s = std::any_of(leads.begin(), leads.end(),
                                  [](const Monomial& m) { return m.is_pure_s(); });
  const bool pure_t = std::any_of(leads.begin(), leads.end(),
                                  [](const Monomial& m) { return m.is_pure_t(); });
  return pure_s && pure_t;
}

GroebnerBasis basis_of(const ProblemInstance& inst) {
  return reduced_groebner_basis({inst.divided_differences(), inst.order()});
}

}  // namespace

Decision is_birational(const ProblemInstance& inst) {
  GroebnerBasis basis = basis_of(inst);
  const bool yes = has_pure_powers(basis);
  return {yes, std::move(basis)};
}

Decision is_isomorphism(const ProblemInstance& inst) {
  GroebnerBasis basis = basis_of(inst);
  const bool yes = basis.is_unit();
  return {yes, std::move(basis)};
}

const char* to_string(AmCheck am) {
  switch (am) {
    case AmCheck::kSatisfied: return "satisfied";
    case AmCheck::kViolated: return "violated";
    case AmCheck::kInapplicable: return "inapplicable";
  }
  return "?";
}

AmCheck abhyankar_moh_check(const UniPoly& f1, const UniPoly& f2) {
  if (f1.is_constant() || f2.is_constant()) {
    throw Error(ErrorCode::kConstantInput, "degree test needs two nonconstant polynomials");
  }
  const std::uint32_t d1 = f1.degree().value();
  const std::uint32_t d2 = f2.degree().value();
  const std::uint32_t m = std::min(d1, d2);
  const std::uint32_t n = std::max(d1, d2);
  const std::uint32_t p = f1.field().characteristic();
  if (p != 0 && std::gcd(m, n) % p == 0) return AmCheck::kInapplicable;
  return n % m == 0 ? AmCheck::kSatisfied : AmCheck::kViolated;
}

AmCheck abhyankar_moh_check(std::span<const UniPoly> polys) {
  if (polys.size() != 2) {
    throw Error(ErrorCode::kWrongArity,
                "degree test takes exactly two polynomials, got " + std::to_string(polys.size()));
  }
  return abhyankar_moh_check(polys[0], polys[1]);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kNotBirational: return "NotBirational";
    case Classification::kBirationalNotIsomorphism: return "BirationalNotIsomorphism";
    case Classification::kIsomorphism: return "Isomorphism";
  }
  return "?";
}

const char* display_name(Classification c) {
  switch (c) {
    case Classification::kNotBirational: return "NOT BIRATIONAL";
    case Classification::kBirationalNotIsomorphism: return "BIRATIONAL, NOT ISOMORPHISM";
    case Classification::kIsomorphism: return "ISOMORPHISM";
  }
  return "?";
}

Verdict classify(const ProblemInstance& inst) {
  const Guard guard = check_preconditions(inst);
  if (guard == Guard::kDegenerateImage) {
    throw Error(ErrorCode::kDegenerateImage, "degenerate image (point)");
  }

  Verdict v;
  v.basis = basis_of(inst);
  v.staircase = staircase_dimension(v.basis);

  if (inst.polys().size() == 2 && !inst.polys()[0].is_constant() &&
      !inst.polys()[1].is_constant()) {
    v.am_check = abhyankar_moh_check(inst.polys());
  }

  if (guard == Guard::kInseparable) {
    // Every f_i lies in k[t^p], so k(f) is inside k(t^p) != k(t).
    v.classification = Classification::kNotBirational;
    v.reason_codes.push_back("inseparable");
  } else if (v.basis.is_unit()) {
    v.classification = Classification::kIsomorphism;
    v.reason_codes.push_back("unit_ideal");
    v.reason_codes.push_back("isomorphism_over_algebraic_closure");
  } else if (has_pure_powers(v.basis)) {
    v.classification = Classification::kBirationalNotIsomorphism;
    v.reason_codes.push_back("zero_dimensional");
  } else {
    v.classification = Classification::kNotBirational;
    v.reason_codes.push_back("positive_dimensional");
  }
  if (v.am_check) v.reason_codes.push_back(std::string("am_") + to_string(*v.am_check));
  return v;
}

}  // namespace birat
