#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

ReesParams params(std::uint64_t p, int n, int s, int l, std::vector<std::uint32_t> v) {
  return ReesParams{p, n, s, l, std::move(v)};
}

const std::vector<ReesParams>& grid() {
  static const std::vector<ReesParams> tuples = [] {
    std::vector<ReesParams> out;
    for (std::uint32_t p : {2u, 3u}) {
      out.push_back(params(p, 2, 1, 1, {p, 1}));
      out.push_back(params(p, 3, 1, 1, {p, 1, 1}));
      out.push_back(params(p, 3, 1, 2, {p, p, 1}));
      out.push_back(params(p, 3, 1, 2, {p, p * p, 1}));
      out.push_back(params(p, 4, 1, 2, {p, p, 1, 1}));
      out.push_back(params(p, 4, 1, 3, {p, p, p, 1}));
      out.push_back(params(p, 3, 2, 2, {p, 1}));
      out.push_back(params(p, 4, 2, 3, {p, p, 1}));
    }
    return out;
  }();
  return tuples;
}

}  // namespace

TEST(ReesParams, Validation) {
  EXPECT_NO_THROW(params(2, 3, 1, 2, {2, 2, 1}).validate());
  auto message = [](const ReesParams& bad) {
    try {
      bad.validate();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message(params(4, 3, 1, 2, {2, 2, 1})).find("prime"), std::string::npos);
  EXPECT_NE(message(params(2, 3, 1, 3, {2, 2, 2})).find("l"), std::string::npos);
  EXPECT_NE(message(params(2, 3, 1, 2, {2, 3, 1})), "accepted");
  EXPECT_NE(message(params(2, 3, 1, 2, {2, 2, 2})), "accepted");
  EXPECT_NE(message(params(2, 3, 1, 2, {2, 2})), "accepted");
  EXPECT_NE(message(params(2, 3, 0, 2, {2, 2, 2, 1})), "accepted");
  EXPECT_THROW(params(2, 3, 1, 2, {2, 6, 1}).validate(true), ValidationError);
  EXPECT_NO_THROW(params(2, 3, 1, 2, {2, 6, 1}).validate(false));
}

TEST(ReesParams, FlagSyntaxRoundTrip) {
  ReesParams a = params(3, 4, 2, 3, {3, 9, 1});
  EXPECT_EQ(a.to_string(), "p=3 n=4 s=2 l=3 v=3,9,1");
  EXPECT_EQ(parse_rees_params(a.to_string()), a);
  EXPECT_EQ(parse_rees_params("v=3,9,1 l=3 s=2 n=4 p=3"), a);
  EXPECT_THROW(parse_rees_params("p=3 n=4 s=2 v=3,9,1"), ParseError);
  EXPECT_THROW(parse_rees_params("p=3 n=4 s=2 l=3 l=3 v=3,9,1"), ParseError);
  EXPECT_THROW(parse_rees_params("p=3 n=4 s=2 l=3 q=1 v=3,9,1"), ParseError);
  EXPECT_THROW(parse_rees_params("p=3 n=four s=2 l=3 v=3,9,1"), ParseError);
}

TEST(ReesPresentation, SmallestCase) {
  auto a = rees_presentation(params(2, 2, 1, 1, {2, 1}));
  EXPECT_EQ(a.ring->variables(), (std::vector<std::string>{"x1", "x2", "T1", "T2"}));
  EXPECT_TRUE(ideal_equal(a.relations, I(a.ring, "x1^2*T2 - x2*T1")));
}

TEST(ReesPresentation, CenterStartingAtTwo) {
  auto a = rees_presentation(params(2, 3, 2, 2, {2, 1}));
  EXPECT_EQ(a.ring->variables(), (std::vector<std::string>{"x1", "x2", "x3", "T2", "T3"}));
  EXPECT_TRUE(ideal_equal(a.relations, I(a.ring, "x2^2*T3 - x3*T2")));
}

TEST(ReesPresentation, GeneratorCounts) {
  for (const auto& t : grid()) {
    auto a = rees_presentation(t);
    const std::size_t k = static_cast<std::size_t>(t.n - t.s + 1);
    EXPECT_EQ(a.ring->nvars(), static_cast<std::size_t>(t.n) + k) << t.to_string();
    EXPECT_EQ(a.relations.generators().size(), k * (k - 1) / 2) << t.to_string();
  }
  EXPECT_EQ(rees_presentation(params(2, 3, 1, 2, {2, 2, 1})).relations.generators().size(), 3u);
}

TEST(ReesPresentation, RejectsInvalidShape) {
  EXPECT_THROW(rees_presentation(params(2, 3, 1, 3, {2, 2, 2})), ValidationError);
}

TEST(TargetIdeal, Examples) {
  auto t1 = params(2, 2, 1, 1, {2, 1});
  auto r1 = rees_ring(t1.power_ideal());
  EXPECT_TRUE(ideal_equal(target_ideal(t1), I(r1, "x1^2, x2, T1, x1^2*T2 - x2*T1")));

  auto t2 = params(2, 3, 2, 2, {2, 1});
  auto r2 = rees_ring(t2.power_ideal());
  EXPECT_TRUE(ideal_equal(target_ideal(t2), I(r2, "x2^2, x3, T2, x2^2*T3 - x3*T2")));
}

TEST(ExceptionalIdeal, ContainedInTarget) {
  auto t = params(2, 2, 1, 1, {2, 1});
  auto r = rees_ring(t.power_ideal());
  EXPECT_TRUE(ideal_equal(exceptional_ideal(t.power_ideal()), I(r, "x1^2, x2, x1^2*T2 - x2*T1")));
  for (const auto& g : grid()) EXPECT_TRUE(ideal_contains(target_ideal(g), exceptional_ideal(g.power_ideal())));
}

TEST(Chart, TwoVariableCase) {
  for (std::uint32_t p : {2u, 3u}) {
    auto chart = chart_presentation(params(p, 2, 1, 1, {p, 1}).power_ideal(), 2);
    EXPECT_EQ(chart.algebra.ring->variables(), (std::vector<std::string>{"x1", "x2", "U1"}));
    EXPECT_TRUE(ideal_equal(chart.algebra.relations, I(chart.algebra.ring, "x1^" + std::to_string(p) + " - x2*U1")));
  }
}

TEST(Chart, RemarkBlowUp) {
  // Center (x3^p, x4^(p^2)) in four variables, chart at x3^p T.
  for (std::uint32_t p : {2u, 3u}) {
    PowerIdeal a{p, 4, 3, {p, p * p}};
    auto chart = chart_presentation(a, 3);
    std::string rel = "U4*x3^" + std::to_string(p) + " - x4^" + std::to_string(p * p);
    EXPECT_TRUE(ideal_equal(chart.algebra.relations, I(chart.algebra.ring, rel)));
  }
}

TEST(Chart, LastChartContainsExceptionalDivisor) {
  // On the chart r = n with v_n = 1, the center becomes (x_n).
  auto t = params(2, 3, 1, 2, {2, 2, 1});
  auto chart = chart_presentation(t.power_ideal(), 3);
  const RingPtr& r = chart.algebra.ring;
  Ideal center_here = ideal_sum(chart.algebra.relations, I(r, "x1^2, x2^2, x3"));
  EXPECT_TRUE(ideal_equal(center_here, ideal_sum(chart.algebra.relations, I(r, "x3"))));
}

TEST(Chart, RelationsHoldInLocalizedReesRing) {
  // x_i -> x_i, U_i -> w*T_i must land in J + (w*T_r - 1).
  for (const auto& t : grid()) {
    PowerIdeal a = t.power_ideal();
    auto rees = rees_presentation(a);
    for (int r = t.s; r <= t.n; ++r) {
      auto chart = chart_presentation(a, r);
      RingPtr big = extend_ring(rees.ring, {"w"});
      Polynomial w = Polynomial::variable(big, "w");
      std::vector<Polynomial> images;
      for (const auto& name : chart.algebra.ring->variables()) {
        if (name[0] == 'U') {
          images.push_back(w * Polynomial::variable(big, "T" + name.substr(1)));
        } else {
          images.push_back(Polynomial::variable(big, name));
        }
      }
      Ideal localized = ideal_sum(map_ideal(rees.relations, big), Ideal(big, {w * Polynomial::variable(big, t_name(r)) -
                                                                             Polynomial::from_int(big, 1)}));
      for (const auto& g : chart.algebra.relations.generators()) {
        EXPECT_TRUE(ideal_member(g.substitute(images), localized)) << t.to_string() << " r=" << r;
      }
    }
  }
}

TEST(Micali, KernelEqualsBinomials) {
  auto small = params(2, 2, 1, 1, {2, 1}).power_ideal();
  EXPECT_TRUE(ideal_equal(micali_kernel(small), I(rees_ring(small), "x1^2*T2 - x2*T1")));
  for (const auto& t : grid()) {
    EXPECT_TRUE(ideal_equal(micali_kernel(t.power_ideal()), rees_presentation(t).relations)) << t.to_string();
  }
}

TEST(Micali, SingleGeneratorHasNoRelations) {
  PowerIdeal a{3, 3, 3, {3}};
  EXPECT_TRUE(micali_kernel(a).groebner_basis().empty());
  EXPECT_TRUE(rees_presentation(a).relations.generators().empty());
}

TEST(Micali, KernelElementsVanishUnderTheMap) {
  auto t = params(3, 3, 1, 2, {3, 9, 1});
  PowerIdeal a = t.power_ideal();
  Ideal kernel = micali_kernel(a);
  auto target = fp(3, "x1,x2,x3,t");
  std::vector<Polynomial> images;
  for (int i = 1; i <= 3; ++i) images.push_back(Polynomial::variable(target, x_name(i)));
  for (int i = 1; i <= 3; ++i) images.push_back(Polynomial::variable(target, x_name(i), a.exponent(i)) * P(target, "t"));
  for (const auto& g : kernel.groebner_basis()) EXPECT_TRUE(g.substitute(images).is_zero()) << g.to_string();
}
