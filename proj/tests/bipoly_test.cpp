#include <gtest/gtest.h>

#include "birat/bipoly.hpp"
#include "birat/format.hpp"
#include "support/random_polys.hpp"

namespace birat {
namespace {

const Field kQ = Field::rationals();
const TermOrder kDrl = TermOrder::degrevlex();

BiPoly bi(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, long>> terms,
          const Field& field = kQ) {
  BiPoly p(field);
  for (const auto& [es, et, c] : terms) p.add_term(Monomial{es, et}, Scalar(field, c));
  return p;
}

// Monomial{exp_s, exp_t}
const Monomial kOne{0, 0}, kS{1, 0}, kT{0, 1};

TEST(TermOrder, DegrevlexTieBreakFavoursLowerSPower) {
  EXPECT_TRUE(compare_monomials(Monomial{4, 1}, Monomial{5, 0}, kDrl) > 0);  // t*s^4 > s^5
  EXPECT_TRUE(compare_monomials(Monomial{0, 2}, Monomial{1, 1}, kDrl) > 0);  // t^2 > t*s
  EXPECT_TRUE(compare_monomials(Monomial{1, 1}, Monomial{2, 0}, kDrl) > 0);  // t*s > s^2
  EXPECT_TRUE(compare_monomials(Monomial{6, 0}, Monomial{0, 5}, kDrl) > 0);  // degree first
}

TEST(TermOrder, OneIsMinimal) {
  for (const TermOrder& ord : {kDrl, TermOrder::lex(), TermOrder::degrevlex(Variable::kT),
                               TermOrder::lex(Variable::kT)}) {
    EXPECT_TRUE(compare_monomials(kOne, kS, ord) < 0);
    EXPECT_TRUE(compare_monomials(kOne, kT, ord) < 0);
  }
}

TEST(TermOrder, LexIgnoresTotalDegree) {
  EXPECT_TRUE(compare_monomials(kT, Monomial{9, 0}, TermOrder::lex()) > 0);
  EXPECT_TRUE(compare_monomials(kT, Monomial{9, 0}, TermOrder::lex(Variable::kT)) < 0);
}

TEST(TermOrder, AxiomsOnRandomTriples) {
  testing::PolyGen gen(11);
  for (const TermOrder& ord : {kDrl, TermOrder::lex(), TermOrder::degrevlex(Variable::kT),
                               TermOrder::lex(Variable::kT)}) {
    for (int i = 0; i < 2000; ++i) {
      const Monomial a = gen.monomial(6), b = gen.monomial(6), c = gen.monomial(6);
      const auto ab = compare_monomials(a, b, ord);
      // Totality and antisymmetry.
      ASSERT_EQ(ab == 0, a == b);
      ASSERT_EQ(ab < 0, compare_monomials(b, a, ord) > 0);
      // Multiplicativity.
      ASSERT_EQ(compare_monomials(a * c, b * c, ord), ab);
      // Transitivity.
      if (ab < 0 && compare_monomials(b, c, ord) < 0) {
        ASSERT_TRUE(compare_monomials(a, c, ord) < 0);
      }
      ASSERT_TRUE(compare_monomials(kOne, a, ord) <= 0);
    }
  }
}

TEST(LeadingTerm, Examples) {
  const BiPoly g = bi({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}});  // t^2 + ts + s^2
  EXPECT_EQ(g.leading_term(kDrl).monomial, (Monomial{0, 2}));
  const BiPoly h = bi({{0, 1, 1}, {1, 0, 1}, {0, 0, 1}});  // t + s + 1
  EXPECT_EQ(h.leading_term(kDrl).monomial, kT);
  EXPECT_EQ(h.leading_term(TermOrder::lex()).monomial, kT);
  try {
    (void)BiPoly(kQ).leading_term(kDrl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPolynomial);
  }
}

TEST(BiPolyArith, Examples) {
  const BiPoly g = bi({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}});
  const BiPoly t_minus_s = BiPoly::t(kQ) - BiPoly::s(kQ);
  EXPECT_EQ(t_minus_s * g, bi({{0, 3, 1}, {3, 0, -1}}));
  EXPECT_TRUE((g + (-g)).is_zero());
  EXPECT_EQ(BiPoly::constant(Scalar::one(kQ)) * g, g);
  EXPECT_EQ(g.monomial_mul(Scalar(kQ, 2L), kS), bi({{1, 2, 2}, {2, 1, 2}, {3, 0, 2}}));
  EXPECT_THROW((void)(g + bi({{0, 1, 1}}, Field::prime(5))), Error);
}

TEST(DividedDifference, Examples) {
  EXPECT_EQ(divided_difference(UniPoly(kQ, {{3, 1}})), bi({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
  // t^4 - 2t^2 + 2 -> (t^3 + t^2 s + t s^2 + s^3) - 2(t + s)
  EXPECT_EQ(divided_difference(UniPoly(kQ, {{4, 1}, {2, -2}, {0, 2}})),
            bi({{0, 3, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}, {0, 1, -2}, {1, 0, -2}}));
  EXPECT_TRUE(divided_difference(UniPoly(kQ, {{0, 7}})).is_zero());
}

TEST(SubstituteDiagonal, Examples) {
  EXPECT_EQ(substitute_diagonal(bi({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}})), UniPoly(kQ, {{2, 3}}));
  EXPECT_EQ(substitute_diagonal(bi({{0, 1, 1}, {1, 0, 1}, {0, 0, 1}})),
            UniPoly(kQ, {{1, 2}, {0, 1}}));
  EXPECT_TRUE(substitute_diagonal(BiPoly(kQ)).is_zero());
}

class DividedDifferenceProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(DividedDifferenceProperties, IdentitiesHold) {
  const Field field = Field::parse(GetParam());
  testing::PolyGen gen(2024);
  for (int i = 0; i < 300; ++i) {
    const UniPoly f = gen.uni_upto(field, 12, -50, 50);
    const UniPoly h = gen.uni_upto(field, 12, -50, 50);
    const BiPoly g = divided_difference(f);
    ASSERT_EQ(testing::times_t_minus_s(g), BiPoly::from_t(f) - BiPoly::from_s(f));
    ASSERT_EQ(substitute_diagonal(g), derivative(f));
    // Linearity.
    ASSERT_EQ(divided_difference(f + h), g + divided_difference(h));
    const Scalar c(field, gen.integer(-9, 9));
    ASSERT_EQ(divided_difference(c * f), c * g);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, DividedDifferenceProperties,
                         ::testing::Values("Q", "F2", "F3", "F101"));

TEST(PrimitiveForm, ClearsDenominatorsAndContent) {
  // -3/4 t^2 + 3/2 s - 9/8  ->  2 t^2 - 4 s + 3
  BiPoly p(kQ);
  p.add_term(Monomial{0, 2}, Scalar(kQ, Rational(-3) / Rational(4)));
  p.add_term(Monomial{1, 0}, Scalar(kQ, Rational(3) / Rational(2)));
  p.add_term(Monomial{0, 0}, Scalar(kQ, Rational(-9) / Rational(8)));
  EXPECT_EQ(primitive_form(p, kDrl), bi({{0, 2, 2}, {1, 0, -4}, {0, 0, 3}}));
  EXPECT_EQ(format_poly(p, kDrl, FormatStyle::kIntegerPrimitive), "2*t^2 - 4*s + 3");
  EXPECT_EQ(format_poly(p, kDrl, FormatStyle::kMonic), "t^2 - 2*s + 3/2");
}

}  // namespace
}  // namespace birat
