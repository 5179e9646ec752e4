#include <gtest/gtest.h>

#include "catenary/error.hpp"
#include "catenary/poly.hpp"
#include "helpers.hpp"

using namespace catenary;
using helpers::poly;

TEST(Field, PrimeFieldArithmeticWrapsAround) {
  Field f7 = Field::prime(7);
  EXPECT_EQ(f7.add(5, 4), 2);
  EXPECT_EQ(f7.neg(3), 4);
  EXPECT_EQ(f7.mul(f7.inv(3), 3), 1);
  EXPECT_EQ(f7.normalize(mpq_class(1, 2)), 4);
  EXPECT_EQ(f7.name(), "F7");
}

TEST(Field, RejectsCompositeCharacteristic) {
  EXPECT_THROW(Field::prime(9), ParameterError);
  EXPECT_THROW(Field::prime(1), ParameterError);
}

TEST(Field, DenominatorDivisibleByCharacteristicIsRejected) {
  EXPECT_THROW(Field::prime(5).normalize(mpq_class(1, 10)), ParameterError);
}

TEST(Field, RationalsKeepCanonicalForm) {
  Field q = Field::rationals();
  EXPECT_EQ(q.div(1, 3) + q.div(1, 6), mpq_class(1, 2));
  EXPECT_EQ(q.render(mpq_class(-3, 4)), "-3/4");
}

TEST(Monomial, DivisibilityAndLcm) {
  Monomial a({2, 0, 1});
  Monomial b({1, 1, 1});
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.lcm(b), Monomial({2, 1, 1}));
  EXPECT_EQ((a * b).total_degree(), 6u);
  EXPECT_EQ(Monomial({2, 1, 1}).quotient(b), Monomial({1, 0, 0}));
  EXPECT_TRUE(Monomial({1, 0, 0}).coprime(Monomial({0, 2, 1})));
}

TEST(MonomialOrder, GrevlexAndLexDisagreeWhereExpected) {
  Monomial xz2({1, 0, 2});
  Monomial y3({0, 3, 0});
  Monomial x2({2, 0, 0});
  EXPECT_EQ(MonomialOrder::lex().compare(xz2, y3), std::strong_ordering::greater);
  EXPECT_EQ(MonomialOrder::grevlex().compare(xz2, y3), std::strong_ordering::less);
  EXPECT_EQ(MonomialOrder::grevlex().compare(x2, Monomial({0, 1, 1})),
            std::strong_ordering::greater);
}

TEST(MonomialOrder, EliminationPutsFirstBlockFirst) {
  auto order = MonomialOrder::elimination(1);
  EXPECT_EQ(order.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})), std::strong_ordering::greater);
}

TEST(MonomialOrder, MismatchedLengthsAreContextErrors) {
  EXPECT_THROW(compare_monomials(Monomial(2), Monomial(3), MonomialOrder::lex()), ContextError);
}

TEST(VariableContext, RejectsDuplicates) {
  EXPECT_THROW(VariableContext({"x", "x"}), ParameterError);
}

TEST(Polynomial, ArithmeticNormalizes) {
  auto r = helpers::ring({"x", "y"});
  Polynomial x = Polynomial::variable(r, "x");
  Polynomial y = Polynomial::variable(r, "y");
  EXPECT_TRUE(((x + y) - (y + x)).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(poly(r, "2*x^2 + 3x y - x^2"), poly(r, "x^2 + 3*x*y"));
  EXPECT_EQ(poly(r, "x^2 + x*y").to_string(), "x^2 + x*y");
  EXPECT_EQ(poly(r, "1/2 x - 3").to_string(), "1/2*x - 3");
}

TEST(Polynomial, LeadingTermFollowsOrder) {
  auto lex = helpers::ring({"x", "y", "z"}, MonomialOrder::lex());
  auto grevlex = helpers::ring({"x", "y", "z"});
  EXPECT_EQ(poly(lex, "y^3 + x*z").leading_monomial(), Monomial({1, 0, 1}));
  EXPECT_EQ(poly(grevlex, "y^3 + x*z").leading_monomial(), Monomial({0, 3, 0}));
}

TEST(Polynomial, DifferentContextsDoNotMix) {
  auto a = helpers::ring({"x", "y"});
  auto b = helpers::ring({"x", "z"});
  EXPECT_THROW(Polynomial::variable(a, 0) + Polynomial::variable(b, 0), ContextError);
  auto c = PolyRing::make(Field::prime(5), {"x", "y"});
  EXPECT_THROW(Polynomial::variable(a, 0) * Polynomial::variable(c, 0), ContextError);
}

TEST(Polynomial, InRingResortsTerms) {
  auto g = helpers::ring({"x", "y", "z"});
  auto l = g->with_order(MonomialOrder::lex());
  Polynomial f = poly(g, "y^3 + x*z");
  Polynomial h = f.in_ring(l);
  EXPECT_EQ(h.leading_monomial(), Monomial({1, 0, 1}));
  EXPECT_EQ(f, h);
}

TEST(Polynomial, HomogeneityAndDegree) {
  auto r = helpers::ring({"x", "y"});
  EXPECT_TRUE(poly(r, "x^2 - 3x*y").is_homogeneous());
  EXPECT_FALSE(poly(r, "x^2 - y").is_homogeneous());
  EXPECT_EQ(poly(r, "x^2*y - y").total_degree(), 3u);
}

TEST(Division, RemainderHasNoDivisibleTerms) {
  auto r = helpers::ring({"x", "y"}, MonomialOrder::lex());
  Polynomial f = poly(r, "x^2*y + x*y^2 + y^2");
  std::vector<Polynomial> gs = helpers::polys(r, "x*y - 1, y^2 - 1");
  DivisionResult d = divide(f, gs);
  EXPECT_EQ(d.remainder, poly(r, "x + y + 1"));
  Polynomial back = d.remainder;
  for (std::size_t i = 0; i < gs.size(); ++i) back = back + d.quotients[i] * gs[i];
  EXPECT_EQ(back, f);
}

TEST(Division, ExactQuotient) {
  auto r = helpers::ring({"x", "y"});
  EXPECT_EQ(exact_quotient(poly(r, "x^2 - y^2"), poly(r, "x + y")), poly(r, "x - y"));
  EXPECT_THROW(exact_quotient(poly(r, "x^2 + y"), poly(r, "x")), ParameterError);
}

TEST(Polynomial, PrimeFieldCoefficientsReduce) {
  auto r = PolyRing::make(Field::prime(3), {"x"});
  Polynomial x = Polynomial::variable(r, 0);
  EXPECT_TRUE((x + x + x).is_zero());
  EXPECT_EQ((x * Polynomial::constant(r, 4)), x);
}
