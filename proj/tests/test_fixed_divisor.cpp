#include "fixdiv/factorials.hpp"
#include "fixdiv/fixed_divisor.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fixdiv;

namespace {

FactoredIdeal id(long g) { return FactoredIdeal::of(Integer(g)); }

const std::vector<Method> kCertified{Method::grid,         Method::grid_improved, Method::points,
                                     Method::two_point,    Method::coeff_product, Method::coeff_general};

const char* const kWorked = "1 - 53/30*y + 1/2*x*y + 12/5*y^2 - 1/2*x*y^2 - 19/30*y^3";

}  // namespace

TEST(Grid, Examples) {
  const SetSpec z = parse_set("Z");
  EXPECT_EQ(fixdiv_grid(parse_poly("x^2 + x", 1), z).ideal, id(2));
  EXPECT_EQ(fixdiv_grid(parse_poly("5*x + 3", 1), z).ideal, id(1));
  const SetSpec s = parse_set("Z x 2Z");
  const Poly f = parse_poly("x*(x-1)*y*(y-2)", 2);
  EXPECT_EQ(fixdiv_grid(f, s).ideal, FactoredIdeal::of(oracle::box_gcd(f, s, 8)));
  EXPECT_EQ(fixdiv_grid(f, s).ideal, id(16));
}

TEST(Grid, ImprovedUsesFewerPoints) {
  const SetSpec zz = parse_set("Z x Z");
  const auto worked = fixdiv_grid_improved(parse_poly("x*y^2 + y^3 + 1", 2), zz);
  EXPECT_EQ(worked.witnesses.size(), 7u);
  EXPECT_EQ(fixdiv_grid(parse_poly("x*y^2 + y^3 + 1", 2), zz).witnesses.size(), 8u);
  const Poly f = parse_poly("x^5 + y^5", 2);
  EXPECT_EQ(fixdiv_grid_improved(f, zz).witnesses.size(), 21u);
  EXPECT_EQ(fixdiv_grid(f, zz).witnesses.size(), 36u);
  EXPECT_EQ(fixdiv_grid_improved(f, zz).ideal, fixdiv_grid(f, zz).ideal);
  const Poly g = parse_poly("x^3 - x + 6", 1);
  EXPECT_EQ(fixdiv_grid_improved(g, parse_set("3Z+1")).witnesses, fixdiv_grid(g, parse_set("3Z+1")).witnesses);
}

TEST(Points, Examples) {
  const SetSpec z = parse_set("Z");
  FixedDivisorOptions at1;
  at1.start = Point{Integer(1)};
  const auto a = fixdiv_points(parse_poly("x^2 + x", 1), z, at1);
  EXPECT_EQ(a.ideal, id(2));
  EXPECT_EQ(a.witnesses.front(), Point{Integer(1)});
  FixedDivisorOptions at0;
  at0.start = Point{Integer(0)};
  EXPECT_EQ(fixdiv_points(parse_poly("5*x + 3", 1), z, at0).ideal, id(1));
  EXPECT_EQ(fixdiv_points(parse_poly("12", 2), parse_set("Z x 2Z")).ideal, id(12));
}

TEST(Points, RejectsBadStart) {
  FixedDivisorOptions at0;
  at0.start = Point{Integer(0)};
  EXPECT_THROW(fixdiv_points(parse_poly("x^2 + x", 1), parse_set("Z"), at0), DomainError);
  FixedDivisorOptions outside;
  outside.start = Point{Integer(1)};
  EXPECT_THROW(fixdiv_points(parse_poly("x + 2", 1), parse_set("2Z"), outside), DomainError);
}

TEST(TwoPoint, Examples) {
  const SetSpec z = parse_set("Z");
  FixedDivisorOptions at1;
  at1.start = Point{Integer(1)};
  const auto a = fixdiv_two_point(parse_poly("x^2 + x", 1), z, at1);
  EXPECT_EQ(a.ideal, id(2));
  ASSERT_EQ(a.witnesses.size(), 2u);
  EXPECT_EQ(FactoredIdeal::of(Integer(gcd(Integer(2), evaluate(parse_poly("x^2+x", 1), a.witnesses[1]).get_num()))),
            id(2));

  FixedDivisorOptions at0;
  at0.start = Point{Integer(0)};
  const auto b = fixdiv_two_point(parse_poly("5*x + 3", 1), z, at0);
  EXPECT_EQ(b.ideal, id(1));
  EXPECT_EQ(mod_floor(b.witnesses[1][0] - 1, Integer(3)), 0);
}

TEST(Coeff, Examples) {
  const SetSpec z = parse_set("Z");
  EXPECT_EQ(fixdiv_coeff_product(parse_poly("x^2 + x", 1), z).ideal, id(2));
  EXPECT_EQ(fixdiv_coeff_general(parse_poly("x^2 + x", 1), z).ideal, id(2));
  EXPECT_EQ(fixdiv_coeff_product(parse_poly("-7", 2), parse_set("Z x 2Z")).ideal, id(7));
  const Poly f = parse_poly("x*(x-1)*(y-1)*(y-3)", 2);
  EXPECT_EQ(fixdiv_coeff_product(f, parse_set("Z x 2Z+1")).ideal, id(16));
  EXPECT_EQ(m_factorial(parse_set("Z x 2Z+1"), Exponent{2, 2}), id(16));
}

TEST(Coeff, GeneralDividesStartValue) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const SetSpec s = oracle::random_set(rng, 1 + rng() % 2, 4);
    Exponent m(s.dimension());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = rng() % 4;
    Poly f = oracle::random_poly(rng, m, 30, 4);
    if (f.is_zero()) continue;
    const auto res = fixdiv_coeff_general(f, s);
    const Point a = choose_start(f, s, 1000);
    EXPECT_TRUE(res.ideal.divides(FactoredIdeal::of(evaluate(f, a).get_num())));
  }
}

TEST(FixedDivisor, ZeroAndContent) {
  EXPECT_THROW(fixed_divisor(parse_poly("0", 1), parse_set("Z")), DomainError);
  EXPECT_EQ(fixed_divisor(parse_poly("6*x^2 + 6*x", 1), parse_set("Z")).ideal, id(12));
  EXPECT_THROW(fixed_divisor(parse_poly("x/2", 1), parse_set("Z")), DomainError);
  EXPECT_THROW(fixed_divisor(parse_poly("x", 2), parse_set("Z")), DomainError);
}

TEST(FixedDivisor, MethodNames) {
  for (Method m : {Method::grid, Method::grid_improved, Method::points, Method::two_point, Method::coeff_product,
                   Method::coeff_general, Method::sampler, Method::automatic})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("fastest").has_value());
}

TEST(FixedDivisor, UnionSets) {
  const SetSpec s = parse_set("{3Z+1 u 3Z+2} x Z");
  const Poly f = parse_poly("x^2*y^2 - x*y + 4", 2);
  const auto ideal = fixed_divisor(f, s).ideal;
  EXPECT_EQ(ideal, fixdiv_grid(f, s).ideal);
  EXPECT_EQ(ideal, FactoredIdeal::of(oracle::box_gcd(f, s, 10)));
}

TEST(FixedDivisor, SamplerAgreesWithGrid) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const SetSpec s = oracle::random_set(rng, 1 + rng() % 2, 4);
    Exponent m(s.dimension());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = rng() % 4;
    const Poly f = oracle::random_poly(rng, m, 30, 4);
    if (f.is_zero()) continue;
    const auto res = fixdiv_sampler(f, s);
    EXPECT_FALSE(res.certified);
    EXPECT_EQ(res.ideal, fixdiv_grid(f, s).ideal);
  }
}

TEST(FixedDivisor, CrossMethodAgreement) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    const SetSpec s = oracle::random_set(rng, 1 + rng() % 2, 4);
    Exponent m(s.dimension());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = rng() % 4;
    const Poly f = oracle::random_poly(rng, m, 50, 5);
    if (f.is_zero()) continue;
    const auto ref = fixdiv_grid(f, s).ideal;
    EXPECT_EQ(ref, FactoredIdeal::of(oracle::box_gcd(f, s, 9))) << format(f) << " on " << s.to_string();
    for (Method method : kCertified) {
      const auto res = fixed_divisor(f, s, method);
      EXPECT_TRUE(res.certified);
      EXPECT_EQ(res.ideal, ref) << to_string(method) << " " << format(f) << " on " << s.to_string();
    }
  }
}

TEST(FixedDivisor, ProductOfValues) {
  // The points built for type (m1+m2, k1+k2) generate d(S,f), d(S,g) and d(S,fg).
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const SetSpec s = oracle::random_set(rng, 1 + rng() % 2, 3);
    Exponent m(s.dimension());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = 1 + rng() % 2;
    const Poly f = oracle::random_poly(rng, m, 20, 3), g = oracle::random_poly(rng, m, 20, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const Poly fg = f * g;
    const auto pts = fixdiv_points(fg, s).witnesses;
    Integer df = 0, dg = 0, dfg = 0;
    for (const auto& a : pts) {
      df = gcd(df, evaluate(f, a).get_num());
      dg = gcd(dg, evaluate(g, a).get_num());
      dfg = gcd(dfg, evaluate(fg, a).get_num());
    }
    EXPECT_EQ(FactoredIdeal::of(dfg), fixdiv_grid(fg, s).ideal);
    EXPECT_EQ(FactoredIdeal::of(df), fixdiv_grid(f, s).ideal) << format(f) << " | " << format(g) << " on " << s.to_string();
    EXPECT_EQ(FactoredIdeal::of(dg), fixdiv_grid(g, s).ideal) << format(f) << " | " << format(g) << " on " << s.to_string();
  }
}

TEST(Construct, Examples) {
  const SetSpec s = parse_set("Z x 2Z");
  for (long g : {1, 2, 4, 8}) {
    const Poly f = construct_sharp(s, Exponent{2, 2}, 3, id(g));
    EXPECT_EQ(content(f), 1);
    EXPECT_EQ(f.type(), (PolyType{Exponent{2, 2}, 3}));
    EXPECT_EQ(fixdiv_grid(f, s).ideal, id(g));
  }
  EXPECT_THROW(construct_sharp(s, Exponent{2, 2}, 3, id(16)), DomainError);
  EXPECT_THROW(construct_sharp(s, Exponent{2, 2}, 3, id(3)), DomainError);
  const Poly top = construct_sharp(parse_set("Z"), Exponent{4}, 4, id(24));
  EXPECT_EQ(top.type(), (PolyType{Exponent{4}, 4}));
  EXPECT_EQ(fixdiv_grid(top, parse_set("Z")).ideal, id(24));
}

TEST(Membership, Global) {
  const auto worked = int_member_global(parse_poly(kWorked, 2), parse_set("Z x Z"));
  EXPECT_FALSE(worked.member);
  EXPECT_EQ(worked.prime, Integer(5));
  EXPECT_EQ(worked.witness, (Point{Integer(0), Integer(3)}));
  EXPECT_TRUE(int_member_global(parse_poly("x*(x-1)/2", 1), parse_set("Z")).member);
  EXPECT_TRUE(int_member_global(parse_poly("3*x^4 - 11*y", 2), parse_set("Z x 2Z")).member);
  EXPECT_TRUE(int_member_global(parse_poly("x*(x-2)/8", 1), parse_set("2Z")).member);
  EXPECT_FALSE(int_member_global(parse_poly("x*(x-2)/16", 1), parse_set("2Z")).member);
}
