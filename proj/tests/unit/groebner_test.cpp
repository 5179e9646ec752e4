#include <gtest/gtest.h>

#include "catenary/error.hpp"
#include "catenary/groebner.hpp"
#include "helpers.hpp"

using namespace catenary;
using helpers::ideal;
using helpers::poly;
using helpers::polys;

namespace {

std::vector<Polynomial> gb(const RingPtr& r, std::string_view gens) {
  return groebner_basis(polys(r, gens), r);
}

}  // namespace

TEST(Groebner, MonomialIdealIsItsOwnBasis) {
  auto r = helpers::ring({"x", "y", "z"});
  EXPECT_EQ(gb(r, "x*y, x*z"), polys(r, "x*y, x*z"));
}

TEST(Groebner, LinearSystemUnderLex) {
  auto r = helpers::ring({"x", "y", "z"}, MonomialOrder::lex());
  EXPECT_EQ(gb(r, "x - y, y - z"), polys(r, "x - z, y - z"));
}

TEST(Groebner, DetectsUnitIdeal) {
  auto r = helpers::ring({"x", "y"});
  EXPECT_EQ(gb(r, "x*y - 1, x^2"), polys(r, "1"));
}

TEST(Groebner, ZeroIdealHasEmptyBasis) {
  auto r = helpers::ring({"x", "y"});
  EXPECT_TRUE(groebner_basis(std::vector<Polynomial>{}, r).empty());
  EXPECT_TRUE(groebner_basis(polys(r, "0"), r).empty());
}

TEST(Groebner, ReducedBasisIsMonicAndInterreduced) {
  auto r = helpers::ring({"x", "y", "z"});
  auto basis = gb(r, "2x^2 - y*z, x*y^2 - 3z^3, y^3 - x*z");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis[i].leading_coefficient(), 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms()) {
        EXPECT_FALSE(basis[j].leading_monomial().divides(t.monomial));
      }
    }
  }
  for (const auto& g : polys(r, "2x^2 - y*z, x*y^2 - 3z^3, y^3 - x*z")) {
    EXPECT_TRUE(normal_form(g, basis).is_zero());
  }
}

TEST(Groebner, StepBudgetIsReported) {
  auto r = helpers::ring({"x", "y", "z"});
  Budget tiny;
  tiny.gb_steps = 2;
  EXPECT_THROW(groebner_basis(polys(r, "x^3 - y*z, y^3 - x*z, z^3 - x*y, x*y*z - 1"), r, tiny),
               ResourceError);
}

TEST(Membership, Examples) {
  auto r = helpers::ring({"x", "y", "z"});
  EXPECT_TRUE(contains(ideal(r, "x*y"), poly(r, "x^2*y")));
  EXPECT_FALSE(contains(ideal(r, "x*y, x*z"), poly(r, "x")));
  EXPECT_NE(reduce(poly(r, "x"), ideal(r, "x*y, x*z")), Polynomial(r));
  EXPECT_TRUE(contains(ideal(r, "x*y"), Polynomial(r)));
  EXPECT_TRUE(contains(Ideal::zero(r), Polynomial(r)));
}

TEST(IdealEqual, Examples) {
  auto r = helpers::ring({"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal(r, "x, y"), ideal(r, "y, x")));
  EXPECT_FALSE(ideal_equal(ideal(r, "x"), ideal(r, "x^2")));
  EXPECT_TRUE(ideal_equal(ideal(r, "x + y, y"), ideal(r, "x, y")));
  EXPECT_TRUE(is_subset(ideal(r, "x^2"), ideal(r, "x")));
  EXPECT_FALSE(is_subset(ideal(r, "x"), ideal(r, "x^2")));
}

TEST(IdealCache, SharedAcrossCopiesAndOrders) {
  auto r = helpers::ring({"x", "y", "z"});
  Ideal i = ideal(r, "x - y, y - z");
  Ideal copy = i;
  const auto& a = i.groebner_basis();
  const auto& b = copy.groebner_basis();
  EXPECT_EQ(&a, &b);
  const auto& lex = i.groebner_basis(MonomialOrder::lex());
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.front().ring()->order(), MonomialOrder::lex());
}

TEST(Intersection, Examples) {
  auto r = helpers::ring({"x", "y", "z"});
  EXPECT_TRUE(ideal_equal(ideal_intersection(ideal(r, "x"), ideal(r, "y, z")), ideal(r, "x*y, x*z")));
  Ideal i = ideal(r, "x^2 - y, z");
  EXPECT_TRUE(ideal_equal(ideal_intersection(i, i), i));
  auto big = helpers::ring({"x", "y1", "y2", "y3", "z1"});
  EXPECT_TRUE(ideal_equal(ideal_intersection(ideal(big, "x"), ideal(big, "y1, y2, y3")),
                          ideal(big, "x*y1, x*y2, x*y3")));
}

TEST(Intersection, NonMonomialAgreesWithContainment) {
  auto r = helpers::ring({"x", "y"});
  Ideal i = ideal(r, "x^2 - y");
  Ideal j = ideal(r, "x - 1");
  Ideal k = ideal_intersection(i, j);
  EXPECT_TRUE(is_subset(k, i));
  EXPECT_TRUE(is_subset(k, j));
  EXPECT_TRUE(contains(k, poly(r, "x^2 - y") * poly(r, "x - 1")));
}

TEST(Quotient, Examples) {
  auto r = helpers::ring({"x", "y", "z"});
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal(r, "x*y, x*z"), poly(r, "x")), ideal(r, "y, z")));
  Ideal i = ideal(r, "x^2 + y, z^3");
  EXPECT_TRUE(ideal_equal(ideal_quotient(i, poly(r, "1")), i));
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal(r, "x^2"), poly(r, "x")), ideal(r, "x")));
  EXPECT_TRUE(ideal_quotient(i, Polynomial(r)).is_unit());
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal(r, "x^2, x*y"), Ideal::maximal(r)), ideal(r, "x^2, x*y")));
  auto r2 = helpers::ring({"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal(r2, "x^2, x*y"), Ideal::maximal(r2)), ideal(r2, "x")));
}

TEST(Quotient, ContainsOriginalIdeal) {
  auto r = helpers::ring({"x", "y", "z"});
  Ideal i = ideal(r, "x*y - z^2, y^3");
  Ideal q = ideal_quotient(i, poly(r, "y"));
  EXPECT_TRUE(is_subset(i, q));
}

TEST(Regularity, Examples) {
  auto r = helpers::ring({"x", "y", "z", "v"});
  EXPECT_TRUE(is_regular_element(ideal(r, "x*y, x*z"), poly(r, "x + y")));
  auto two = helpers::ring({"x", "y"});
  EXPECT_FALSE(is_regular_element(ideal(two, "x*y"), poly(two, "x")));
  EXPECT_TRUE(is_regular_element(Ideal::zero(two), poly(two, "x^2 + 3y")));
  EXPECT_THROW(is_regular_element(ideal(two, "x*y"), poly(two, "x^2*y")), DegenerateInputError);
}

TEST(KrullDimension, Examples) {
  auto r = helpers::ring({"x", "y", "z", "v"});
  EXPECT_EQ(krull_dimension(ideal(r, "x*y, x*z")), 3u);
  EXPECT_EQ(krull_dimension(Ideal::zero(r)), 4u);
  auto u = helpers::ring({"x", "y1", "y2", "y3", "z1", "z2"});
  EXPECT_EQ(krull_dimension(ideal(u, "x*y1, x*y2, x*y3")), 5u);
  EXPECT_THROW(krull_dimension(Ideal::unit(r)), UndefinedDimensionError);
  EXPECT_EQ(krull_dimension(ideal(r, "x^2 - y*z, v")), 2u);
}

TEST(KrullDimension, IndependentSetsOfLeadingTerms) {
  std::vector<Monomial> lead{Monomial({1, 1, 0}), Monomial({1, 0, 1})};
  auto set = maximal_independent_set(lead, 3);
  EXPECT_EQ(set, (std::vector<std::size_t>{1, 2}));
}

TEST(DepthZero, Examples) {
  auto two = helpers::ring({"x", "y"});
  EXPECT_TRUE(maximal_ideal_associated(ideal(two, "x^2, x*y")));
  auto four = helpers::ring({"x", "y", "z", "v"});
  EXPECT_FALSE(maximal_ideal_associated(ideal(four, "x*y, x*z")));
  EXPECT_FALSE(maximal_ideal_associated(Ideal::zero(two)));
}

TEST(Depth, PowerSeriesInTwoVariables) {
  auto r = helpers::ring({"x", "y"});
  DepthCertificate c = depth_at_least_two(Ideal::zero(r));
  EXPECT_EQ(c.status, DepthStatus::at_least_two);
  EXPECT_EQ(c.regular_element, poly(r, "x"));
}

TEST(Depth, ProductOfVariablesHasDepthOne) {
  auto r = helpers::ring({"x", "y"});
  Ideal i = ideal(r, "x*y");
  DepthCertificate c = depth_at_least_two(i);
  EXPECT_EQ(c.status, DepthStatus::below_two);
  EXPECT_FALSE(c.depth_zero);
  ASSERT_TRUE(c.regular_element);
  EXPECT_EQ(*c.regular_element, poly(r, "x + y"));
  EXPECT_TRUE(maximal_ideal_associated(i.plus(*c.regular_element)));
}

TEST(Depth, DepthZeroIsDecidedFirst) {
  auto r = helpers::ring({"x", "y"});
  DepthCertificate c = depth_at_least_two(ideal(r, "x^2, x*y"));
  EXPECT_EQ(c.status, DepthStatus::below_two);
  EXPECT_TRUE(c.depth_zero);
  EXPECT_EQ(c.candidates_tried, 0u);
}

TEST(Depth, GluedIdealAdmitsBothCertificates) {
  auto r = helpers::ring({"x", "y1", "y2", "z1", "z2"});
  Ideal i = ideal(r, "x*y1, x*y2");
  DepthCertificate c = depth_at_least_two(i);
  EXPECT_EQ(c.status, DepthStatus::at_least_two);
  EXPECT_EQ(c.regular_element, poly(r, "z1"));
  // x + y1 certifies as well.
  Polynomial f = poly(r, "x + y1");
  EXPECT_TRUE(is_regular_element(i, f));
  EXPECT_FALSE(maximal_ideal_associated(i.plus(f)));
}

TEST(Depth, ExhaustedSearchIsInconclusive) {
  auto r = helpers::ring({"x", "y"});
  Budget b;
  b.regular_candidates = 2;
  DepthCertificate c = depth_at_least_two(ideal(r, "x*y"), b);
  EXPECT_EQ(c.status, DepthStatus::inconclusive);
  EXPECT_EQ(c.candidates_tried, 2u);
}

TEST(Depth, KnownZeroDivisorsAreSkipped) {
  auto r = helpers::ring({"x", "y"});
  std::size_t asked = 0;
  auto skip = [&](const Polynomial& f) {
    ++asked;
    return f.is_term();
  };
  DepthCertificate c = depth_at_least_two(ideal(r, "x*y"), {}, skip);
  EXPECT_EQ(c.regular_element, poly(r, "x + y"));
  EXPECT_EQ(asked, 3u);
}

TEST(Candidates, DeclaredOrderThenPairsThenTriples) {
  auto r = helpers::ring({"a", "b", "c"});
  auto c = regular_element_candidates(r, 10);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0], poly(r, "a"));
  EXPECT_EQ(c[3], poly(r, "a + b"));
  EXPECT_EQ(c[5], poly(r, "b + c"));
  EXPECT_EQ(c[6], poly(r, "a + b + c"));
  EXPECT_EQ(regular_element_candidates(r, 2).size(), 2u);
}
