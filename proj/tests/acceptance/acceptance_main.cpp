// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "birat/birat.hpp"
#include "json.hpp"
#include "support/random_polys.hpp"

#ifndef BIRAT_CLI_PATH
#error "BIRAT_CLI_PATH must point at the birat executable"
#endif

namespace {

using namespace birat;
using nlohmann::json;

const Field kQ = Field::rationals();
const TermOrder kOrder = TermOrder::degrevlex();

// Collects failure details for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

BiPoly term(long c, std::uint32_t es, std::uint32_t et) {
  return BiPoly::monomial(Scalar(kQ, c), Monomial{es, et});
}

std::vector<UniPoly> polys(std::initializer_list<const char*> texts, const Field& f = kQ) {
  std::vector<UniPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, f));
  return out;
}

bool reduces_to_zero(const BiPoly& f, const std::vector<BiPoly>& basis, const TermOrder& order) {
  return reduce(f, basis, order).is_zero();
}

bool same_ideal(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b,
                const TermOrder& order) {
  const GroebnerBasis ga = reduced_groebner_basis({a, order});
  const GroebnerBasis gb = reduced_groebner_basis({b, order});
  for (const auto& f : b) {
    if (!reduces_to_zero(f, ga.elements, order)) return false;
  }
  for (const auto& f : a) {
    if (!reduces_to_zero(f, gb.elements, order)) return false;
  }
  return true;
}

bool scalar_multiple(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return a.monic(kOrder) == b.monic(kOrder);
}

std::string show(const BiPoly& p) { return format_poly(p, kOrder, FormatStyle::kIntegerPrimitive); }

// --- criteria ---------------------------------------------------------------

Check criterion1() {
  Check c;
  const Verdict v = classify(ProblemInstance(polys({"t^3", "t^2 + t"})));
  c.expect(v.classification == Classification::kBirationalNotIsomorphism,
           std::string("classification ") + to_string(v.classification));
  const std::vector<BiPoly> expected{term(1, 0, 1) + term(1, 1, 0) + term(1, 0, 0),
                                     term(1, 2, 0) + term(1, 1, 0) + term(1, 0, 0)};
  c.expect(same_ideal(v.basis.elements, expected, kOrder), "basis differs from {t+s+1, s^2+s+1}");
  c.expect(v.staircase == Staircase{2}, "staircase != 2");
  return c;
}

Check criterion2() {
  Check c;
  const Verdict v = classify(ProblemInstance(polys({"t", "t^2", "t^3"})));
  c.expect(v.classification == Classification::kIsomorphism, "not Isomorphism");
  c.expect(v.basis.elements.size() == 1 && v.basis.elements[0] == BiPoly::constant(Scalar::one(kQ)),
           "basis is not {1}");
  return c;
}

Check criterion3() {
  Check c;
  const Verdict v =
      classify(ProblemInstance(polys({"2*t^8 + t^4 + 3*t + 1", "t^4 - 2*t^2 + 2"})));
  const auto& basis = v.basis.elements;
  // The published basis elements.
  const std::array<BiPoly, 4> h{
      term(1, 1, 2) + term(1, 3, 0) + term(-2, 1, 0),
      term(1, 0, 3) + term(1, 1, 2) + term(1, 2, 1) + term(1, 3, 0) + term(-2, 0, 1) +
          term(-2, 1, 0),
      term(8, 4, 1) + term(8, 5, 0) + term(-16, 2, 1) + term(-16, 3, 0) + term(18, 0, 0),
      term(16, 6, 0) + term(-48, 4, 0) + term(-18, 0, 2) + term(-1, 1, 1) + term(51, 2, 0)};
  c.expect(basis.size() == 4, "basis has " + std::to_string(basis.size()) + " elements");
  std::set<Monomial> lms;
  for (const auto& m : v.basis.leading_monomials()) lms.insert(m);
  const std::set<Monomial> expected_lms{{1, 2}, {0, 3}, {4, 1}, {6, 0}};
  c.expect(lms == expected_lms, "leading monomials differ from {st^2, t^3, ts^4, s^6}");
  for (std::size_t i = 0; i < h.size(); ++i) {
    const bool found = std::any_of(basis.begin(), basis.end(),
                                   [&](const BiPoly& g) { return scalar_multiple(g, h[i]); });
    c.expect(found, "no basis element is a multiple of h" + std::to_string(i + 1) + " = " +
                        show(h[i]));
  }
  c.expect(v.classification == Classification::kBirationalNotIsomorphism,
           std::string("classification ") + to_string(v.classification));
  c.expect(v.am_check == AmCheck::kSatisfied, "AM check not satisfied");
  if (c.failed) {
    std::string got = "computed basis:";
    for (const auto& g : basis) got += " [" + show(g) + "]";
    c.failures.push_back(got);
  }
  return c;
}

Check criterion4() {
  Check c;
  const Verdict v = classify(
      ProblemInstance(polys({"t^10 + t^4", "t^8 + 2*t^2", "t^6 - t^4 + 1"})));
  c.expect(v.basis.elements.size() == 1 &&
               v.basis.elements[0] == term(1, 0, 1) + term(1, 1, 0),
           "basis is not {t+s}");
  c.expect(v.classification == Classification::kNotBirational, "not NotBirational");
  return c;
}

Check criterion5() {
  Check c;
  testing::PolyGen gen(5001);
  for (const Field& field : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 500; ++i) {
      const UniPoly f = gen.uni_upto(field, 12);
      const BiPoly g = divided_difference(f);
      const BiPoly lhs = testing::times_t_minus_s(g);
      const BiPoly rhs = BiPoly::from_t(f) - BiPoly::from_s(f);
      c.expect(lhs == rhs, "(t-s)g != f(t)-f(s) over " + field.to_string());
      c.expect(substitute_diagonal(g) == derivative(f), "g(s,s) != f'(s) over " + field.to_string());
    }
  }
  return c;
}

// The 200 random instances shared by criteria 6, 7 and 9.
const std::vector<std::vector<UniPoly>>& random_instances() {
  static const auto instances = [] {
    testing::PolyGen gen(6006);
    std::vector<std::vector<UniPoly>> out;
    while (out.size() < 200) out.push_back(gen.instance(kQ, 4, 8));
    return out;
  }();
  return instances;
}

Check criterion6() {
  Check c;
  std::mt19937_64 rng(66);
  for (const auto& inst : random_instances()) {
    const std::vector<BiPoly> gens = ProblemInstance(inst).divided_differences();
    const GroebnerBasis basis = reduced_groebner_basis({gens, kOrder});
    const auto& el = basis.elements;
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        c.expect(reduces_to_zero(s_polynomial(el[i], el[j], kOrder), el, kOrder),
                 "S-polynomial does not reduce to 0");
      }
    }
    for (const auto& g : gens) c.expect(reduces_to_zero(g, el, kOrder), "generator not in basis ideal");
    std::vector<BiPoly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const GroebnerBasis again = reduced_groebner_basis({shuffled, kOrder});
    c.expect(again.elements == el, "basis depends on generator order");
  }
  return c;
}

Check criterion7() {
  Check c;
  for (const auto& inst : random_instances()) {
    const ProblemInstance pi(inst);
    const bool finite = staircase_dimension(reduced_groebner_basis({pi.divided_differences(), kOrder}))
                            .is_finite();
    const bool gcd_constant = bivariate_gcd(pi.divided_differences()).is_constant();
    c.expect(finite == gcd_constant, "leading-monomial criterion disagrees with gcd oracle");
  }
  return c;
}

// n = 2 instances seen by criterion 8, for criterion 9.
std::vector<std::pair<std::vector<UniPoly>, Classification>> family_pairs;

void note_pair(const std::vector<UniPoly>& inst, Classification cls) {
  if (inst.size() == 2) family_pairs.emplace_back(inst, cls);
}

Check criterion8() {
  Check c;
  testing::PolyGen gen(8008);
  for (int i = 0; i < 100; ++i) {
    const UniPoly u = gen.uni(kQ, static_cast<std::uint32_t>(gen.integer(2, 3)));
    std::vector<UniPoly> inst;
    const long n = gen.integer(1, 4);
    for (long k = 0; k < n; ++k) {
      inst.push_back(gen.uni(kQ, static_cast<std::uint32_t>(gen.integer(1, 3))).compose(u));
    }
    const auto cls = classify(ProblemInstance(inst)).classification;
    note_pair(inst, cls);
    c.expect(cls == Classification::kNotBirational, "composite instance is birational");
  }
  for (int i = 0; i < 100; ++i) {
    std::vector<UniPoly> inst = gen.instance(kQ, 3, 8, 0.0);
    inst.insert(inst.begin() + gen.integer(0, static_cast<long>(inst.size())), gen.uni(kQ, 1));
    const auto cls = classify(ProblemInstance(inst)).classification;
    note_pair(inst, cls);
    c.expect(cls == Classification::kIsomorphism, "instance with linear entry is not Isomorphism");
  }
  for (int i = 0; i < 100; ++i) {
    const std::vector<UniPoly> inst = gen.instance(kQ, 4, 6);
    const UniPoly affine(kQ, {{1, gen.nonzero(-5, 5)}, {0, gen.integer(-5, 5)}});
    std::vector<UniPoly> moved;
    for (const auto& f : inst) moved.push_back(f.compose(affine));
    const auto before = classify(ProblemInstance(inst)).classification;
    const auto after = classify(ProblemInstance(moved)).classification;
    note_pair(inst, before);
    note_pair(moved, after);
    c.expect(before == after, "reparametrization changed the classification");
  }
  return c;
}

Check criterion9() {
  Check c;
  std::vector<std::pair<std::vector<UniPoly>, Classification>> pairs = family_pairs;
  for (const auto& inst : random_instances()) {
    if (inst.size() == 2) pairs.emplace_back(inst, classify(ProblemInstance(inst)).classification);
  }
  std::size_t applicable = 0;
  for (const auto& [inst, cls] : pairs) {
    const AmCheck am = abhyankar_moh_check(inst);
    if (am == AmCheck::kInapplicable) continue;
    ++applicable;
    c.expect(!(am == AmCheck::kViolated && cls == Classification::kIsomorphism),
             "AM violated on an Isomorphism: " + format_poly(inst[0]) + ", " + format_poly(inst[1]));
  }
  c.expect(applicable > 0, "no applicable n=2 instances");
  c.expect(abhyankar_moh_check(parse_poly("t^3", kQ), parse_poly("t^2 + t", kQ)) ==
               AmCheck::kViolated,
           "(t^3, t^2+t) not violated");
  c.expect(abhyankar_moh_check(parse_poly("2*t^8 + t^4 + 3*t + 1", kQ),
                               parse_poly("t^4 - 2*t^2 + 2", kQ)) == AmCheck::kSatisfied,
           "second example not satisfied");
  return c;
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run_cli(const std::string& args, bool merge_stderr) {
  const std::string cmd =
      std::string("'") + BIRAT_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

Check criterion10() {
  Check c;
  const Run a = run_cli("classify 't^3' 't^2 + t'", false);
  c.expect(a.exit_code == 0 && has_line(a.out, "classification: BIRATIONAL, NOT ISOMORPHISM"),
           "classify t^3 t^2+t");
  const Run b = run_cli("classify 't' 't^2' 't^3'", false);
  c.expect(b.exit_code == 0 && has_line(b.out, "classification: ISOMORPHISM"),
           "classify t t^2 t^3");
  const Run d = run_cli("classify '5' '7'", true);
  c.expect(d.exit_code == 3 && d.out.find("degenerate image (point)") != std::string::npos,
           "classify 5 7");

  const std::string args = "classify --json '2*t^8 + t^4 + 3*t + 1' 't^4 - 2*t^2 + 2'";
  const Run j1 = run_cli(args, false);
  const Run j2 = run_cli(args, false);
  c.expect(j1.exit_code == 0 && j2.exit_code == 0, "JSON run failed");
  json r1 = json::parse(j1.out, nullptr, false);
  json r2 = json::parse(j2.out, nullptr, false);
  c.expect(!r1.is_discarded() && r1.is_object() && !r2.is_discarded(), "output is not JSON");
  if (r1.is_object() && r2.is_object()) {
    std::set<std::string> keys;
    for (const auto& [k, v] : r1.items()) keys.insert(k);
    const std::set<std::string> declared{"classification", "basis_monic", "basis_primitive",
                                         "staircase",      "am_check",    "inputs",
                                         "order",          "field",       "reasons",
                                         "elapsed_ms",     "version"};
    c.expect(keys == declared, "JSON keys differ from the declared set");
    c.expect(r1["classification"].is_string() && r1["basis_monic"].is_array() &&
                 r1["basis_primitive"].is_array() &&
                 (r1["staircase"].is_number_unsigned() || r1["staircase"] == "infinite") &&
                 (r1["am_check"].is_string() || r1["am_check"].is_null()) &&
                 r1["inputs"].is_array() && r1["reasons"].is_array() &&
                 r1["elapsed_ms"].is_number() && r1["version"].is_string(),
             "JSON value types");
    r1.erase("elapsed_ms");
    r2.erase("elapsed_ms");
    c.expect(r1.dump(2) == r2.dump(2), "JSON output not stable across runs");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"cubic/quadratic pair: birational, not isomorphism, staircase 2", criterion1},
      {"twisted cubic: isomorphism with basis {1}", criterion2},
      {"degree 8/4 pair: published 4-element basis, classification, AM satisfied", criterion3},
      {"even-degree triple: basis {t+s}, not birational", criterion4},
      {"divided-difference identities (500 polys over Q and F101)", criterion5},
      {"Groebner basis properties on 200 random ideals", criterion6},
      {"staircase criterion agrees with bivariate gcd oracle", criterion7},
      {"composite / linear-entry / reparametrization families", criterion8},
      {"Abhyankar-Moh consistency", criterion9},
      {"CLI contract and JSON stability", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.failed ? "[FAIL] " : "[PASS] ") << i + 1 << ". " << criteria[i].first << "\n";
    for (const auto& f : c.failures) std::cout << "         " << f << "\n";
    if (c.failed) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
