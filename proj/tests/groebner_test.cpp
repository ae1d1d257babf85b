#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> printed(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& g : basis) out.push_back(g.to_string(order));
  return out;
}

}  // namespace

TEST(Reduce, Basics) {
  auto r = qq("x,y");
  EXPECT_TRUE(reduce(P(r, "x^2"), {P(r, "x")}).is_zero());
  Polynomial f = P(r, "x^3*y + 5");
  EXPECT_EQ(reduce(f, {}), f);
}

TEST(Reduce, OneDivisionStep) {
  // x^2*y + y = y*(x^2 - 1) + 2*y.
  auto r = qq("x,y");
  auto lex = MonomialOrder::lex();
  Polynomial f = P(r, "x^2*y + y");
  Polynomial g = P(r, "x^2 - 1");
  Polynomial rem = reduce(f, {g}, lex);
  EXPECT_EQ(rem, P(r, "2*y"));
  EXPECT_TRUE(certifies(f - rem, {P(r, "y")}, {g}));
}

TEST(Groebner, SingleBinomialIsItsOwnBasis) {
  auto r = fp(2, "x1,x2,T1,T2");
  Polynomial f = P(r, "x1^2*T2 - x2*T1");
  auto basis = Ideal(r, {f}).groebner_basis();
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], f);
  auto q = qq("x,y");
  auto scaled = Ideal(q, {P(q, "3*x^2 - 6*y")}).groebner_basis();
  EXPECT_EQ(scaled, std::vector<Polynomial>{P(q, "x^2 - 2*y")});
}

TEST(Groebner, UnitIdeal) {
  auto r = qq("x");
  auto basis = I(r, "x, x+1").groebner_basis();
  EXPECT_EQ(basis, std::vector<Polynomial>{P(r, "1")});
  EXPECT_TRUE(is_unit_ideal(I(r, "x, x+1")));
}

TEST(Groebner, LexBasisOfTwoParabolas) {
  auto r = qq("x,y");
  auto lex = MonomialOrder::lex();
  Ideal ideal = I(r, "x^2 - y, y^2 - x");
  auto basis = ideal.groebner_basis(lex);
  EXPECT_EQ(printed(basis, lex), (std::vector<std::string>{"x - y^2", "y^4 - y"}));
  // Each basis element is an explicit combination of the generators...
  auto gens = ideal.generators();
  EXPECT_TRUE(certifies(basis[0], {P(r, "0"), P(r, "-1")}, gens));
  EXPECT_TRUE(certifies(basis[1], {P(r, "1"), P(r, "y^2 + x")}, gens));
  // ...and the generators reduce back to zero.
  for (const auto& g : gens) EXPECT_TRUE(reduce(g, basis, lex).is_zero());
}

TEST(Groebner, SPolynomialsReduceToZero) {
  auto r = fp(3, "x,y,z");
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    auto basis = I(r, "x^2*y - z^2, x*y^2 - z, y*z - x").groebner_basis(order);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_TRUE(leading_coefficient(basis[i], order) == r->field().one());
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        EXPECT_TRUE(reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero());
        EXPECT_FALSE(leading_monomial(basis[i], order).divides(leading_monomial(basis[j], order)));
      }
    }
  }
}

TEST(Groebner, ZeroIdeal) {
  auto r = qq("x");
  EXPECT_TRUE(Ideal::zero(r).groebner_basis().empty());
  EXPECT_TRUE(I(r, "0, 0").groebner_basis().empty());
  EXPECT_EQ(Ideal::zero(r).to_string(), "(0)");
}

TEST(Membership, RemarkChartNonMembership) {
  auto r = fp(2, "x3,x4,U");
  Ideal ideal = I(r, "x3, U*x3^2 - x4^4");
  EXPECT_FALSE(ideal_member(P(r, "x4^2"), ideal));
  EXPECT_TRUE(ideal_member(P(r, "x4^4"), ideal));
}

TEST(Membership, ZeroAndEquality) {
  auto r = qq("x,y");
  EXPECT_TRUE(ideal_member(Polynomial(r), I(r, "x^2 + y")));
  EXPECT_TRUE(ideal_equal(I(r, "x, y"), I(r, "x + y, y")));
  EXPECT_FALSE(ideal_equal(I(r, "x"), I(r, "x, y")));
  EXPECT_TRUE(ideal_contains(I(r, "x, y"), I(r, "x^2 + x*y")));
}

TEST(Eliminate, MixedPrincipalIdealContractsToZero) {
  auto r = qq("x,y");
  Ideal out = eliminate(I(r, "x - y"), std::vector<std::string>{"x"});
  EXPECT_EQ(out.ring()->variables(), std::vector<std::string>{"y"});
  EXPECT_TRUE(out.groebner_basis().empty());
}

TEST(Eliminate, KeepsFreeGenerators) {
  auto r = qq("x,y");
  Ideal out = eliminate(I(r, "x, y"), std::vector<std::string>{"x"});
  EXPECT_TRUE(ideal_equal(out, I(out.ring(), "y")));
}

TEST(Eliminate, TwistedCubicImplicitization) {
  // Every element of the result must vanish on (t^2, t^3).
  auto r = qq("t,x,y");
  Ideal out = eliminate(I(r, "x - t^2, y - t^3"), std::vector<std::string>{"t"});
  auto k = qq("t");
  for (const auto& g : out.groebner_basis()) {
    EXPECT_TRUE(g.substitute({P(k, "t^2"), P(k, "t^3")}).is_zero());
  }
  EXPECT_TRUE(ideal_equal(out, I(out.ring(), "x^3 - y^2")));
}

TEST(Saturate, Examples) {
  auto r = qq("x,y");
  EXPECT_TRUE(ideal_equal(saturate(I(r, "x*y"), P(r, "x")), I(r, "y")));
  EXPECT_TRUE(is_unit_ideal(saturate(I(r, "x"), P(r, "x"))));
  Ideal ideal = I(r, "x^2*y, y^3 - x");
  EXPECT_TRUE(ideal_equal(saturate(ideal, P(r, "1")), ideal));
  EXPECT_THROW(saturate(ideal, Polynomial(r)), Error);
}

TEST(Saturate, ContainsOriginalAndKillsPowers) {
  auto r = fp(5, "x,y,z");
  Ideal ideal = I(r, "x^2*y^3, x*z^2 - y^4");
  Ideal sat = saturate(ideal, P(r, "y"));
  EXPECT_TRUE(ideal_contains(sat, ideal));
  // g^k * h in I for every basis element h (k found by search).
  for (const auto& h : sat.groebner_basis()) {
    bool found = false;
    Polynomial power = P(r, "1");
    for (int k = 0; k < 12 && !found; ++k, power = power * P(r, "y")) found = ideal_member(power * h, ideal);
    EXPECT_TRUE(found) << h.to_string();
  }
}

TEST(Intersect, Examples) {
  auto r = qq("x,y");
  Ideal both = ideal_intersect(I(r, "x"), I(r, "y"));
  EXPECT_TRUE(ideal_equal(both, I(r, "x*y")));
  Ideal ideal = I(r, "x^2, x*y");
  EXPECT_TRUE(ideal_equal(ideal_intersect(ideal, ideal), ideal));
  EXPECT_TRUE(ideal_equal(ideal_intersect(Ideal::unit(r), ideal), ideal));
}

TEST(Intersect, AgreesWithContainments) {
  auto r = fp(3, "x,y,z");
  Ideal a = I(r, "x^2, y*z");
  Ideal b = I(r, "x*y, z^2");
  Ideal both = ideal_intersect(a, b);
  EXPECT_TRUE(ideal_contains(a, both));
  EXPECT_TRUE(ideal_contains(b, both));
  EXPECT_TRUE(ideal_contains(both, ideal_product(a, b)));
  EXPECT_TRUE(ideal_member(P(r, "x^2*y"), both));
  EXPECT_FALSE(ideal_member(P(r, "x^2"), both));
}

TEST(LocalizedEqual, Examples) {
  auto r = qq("x,y,z");
  EXPECT_TRUE(localized_equal(I(r, "x*y"), I(r, "y"), P(r, "x")));
  EXPECT_FALSE(localized_equal(I(r, "x"), I(r, "y"), P(r, "z")));
  EXPECT_TRUE(localized_equal(I(r, "x^2 + z"), I(r, "x^2 + z"), P(r, "y")));
}

TEST(Ideal, CacheIsSharedAcrossCopies) {
  auto r = qq("x,y");
  Ideal a = I(r, "x^2 - y, y^2 - x");
  Ideal b = a;
  auto first = a.groebner_basis(MonomialOrder::lex());
  EXPECT_EQ(b.groebner_basis(MonomialOrder::lex()), first);
}
