#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "birat/bipoly.hpp"
#include "birat/groebner.hpp"
#include "birat/unipoly.hpp"

namespace birat {

/// The parametrization t -> (f_1(t), ..., f_n(t)).
class ProblemInstance {
 public:
  /// Throws kAllZero for an empty list, kFieldMismatch for mixed fields.
  explicit ProblemInstance(std::vector<UniPoly> polys,
                           TermOrder order = TermOrder::degrevlex());

  const std::vector<UniPoly>& polys() const { return polys_; }
  const Field& field() const { return field_; }
  const TermOrder& order() const { return order_; }

  /// g_i = (f_i(t) - f_i(s)) / (t - s).
  std::vector<BiPoly> divided_differences() const;

 private:
  std::vector<UniPoly> polys_;
  Field field_;
  TermOrder order_;
};

enum class Guard {
  kPass,
  // Every f_i is constant: the image is a point.
  kDegenerateImage,
  // Some f_i is nonconstant but all derivatives vanish (char p, f_i in k[t^p]).
  kInseparable,
};

const char* to_string(Guard guard);

Guard check_preconditions(const ProblemInstance& inst);

struct Decision {
  bool value = false;
  GroebnerBasis basis;
};

/// Yes iff k(f_1..f_n) = k(t): the reduced basis of <g_1..g_n> has a pure
/// power of s and a pure power of t among its leading monomials.
Decision is_birational(const ProblemInstance& inst);

/// Yes iff k[f_1..f_n] = k[t] over the algebraic closure: the reduced basis
/// is {1}.
Decision is_isomorphism(const ProblemInstance& inst);

enum class AmCheck { kSatisfied, kViolated, kInapplicable };

const char* to_string(AmCheck am);

/// Degree test for two polynomials (m <= n their degrees): k[f1,f2] = k[t]
/// forces m | n whenever char k does not divide gcd(m, n). kViolated thus
/// certifies k[f1,f2] != k[t]. Throws kConstantInput for constant input.
AmCheck abhyankar_moh_check(const UniPoly& f1, const UniPoly& f2);
/// Same, for a list; throws kWrongArity unless it has exactly two entries.
AmCheck abhyankar_moh_check(std::span<const UniPoly> polys);

enum class Classification { kNotBirational, kBirationalNotIsomorphism, kIsomorphism };

/// Identifier form ("NotBirational", ...).
const char* to_string(Classification c);
/// Human-readable form ("NOT BIRATIONAL", ...).
const char* display_name(Classification c);

struct Verdict {
  Classification classification = Classification::kNotBirational;
  GroebnerBasis basis;
  Staircase staircase;
  std::optional<AmCheck> am_check;
  std::vector<std::string> reason_codes;
};

/// Runs one Groebner computation and answers both questions. Inseparable
/// input is reported NotBirational with reason "inseparable".
/// Throws kDegenerateImage when every f_i is constant.
Verdict classify(const ProblemInstance& inst);

}  // namespace birat
