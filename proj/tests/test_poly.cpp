#include "fixdiv/poly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fixdiv;

namespace {
const char* const kWorked = "1 - 53/30*y + 1/2*x*y + 12/5*y^2 - 1/2*x*y^2 - 19/30*y^3";
}

TEST(Parse, Examples) {
  const Poly f = parse_poly("x^2*y + 3*x", 2);
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.coefficient(Exponent{2, 1}), 1);
  EXPECT_EQ(f.coefficient(Exponent{1, 0}), 3);
  EXPECT_EQ(f.type(), (PolyType{Exponent{2, 1}, 3}));

  EXPECT_EQ(parse_poly(kWorked, 2).type(), (PolyType{Exponent{1, 3}, 3}));
  EXPECT_TRUE(parse_poly("0", 2).is_zero());
}

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_poly("(x+1)^2", 1), parse_poly("x^2 + 2*x + 1", 1));
  EXPECT_EQ(parse_poly("x*2*y", 2), parse_poly("2*x*y", 2));
  EXPECT_THROW(parse_poly("2x", 1), ParseError);
  EXPECT_EQ(parse_poly("-x - -y", 2), parse_poly("y - x", 2));
  EXPECT_EQ(parse_poly("x1*x4", 4).degree(), (Exponent{1, 0, 0, 1}));
  EXPECT_THROW(parse_poly("x +", 1), ParseError);
  EXPECT_THROW(parse_poly("z", 2), ParseError);
  EXPECT_THROW(parse_poly("1/0", 1), ParseError);
}

TEST(Parse, FormatRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 3;
    Exponent m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = rng() % 4;
    Poly f = oracle::random_poly(rng, m, 40, 1 + rng() % 6);
    f *= Rational(1, 1 + static_cast<long>(rng() % 6));
    EXPECT_EQ(parse_poly(format(f), n), f) << format(f);
  }
}

TEST(Evaluate, WorkedExample) {
  const Poly f = parse_poly(kWorked, 2);
  EXPECT_EQ(evaluate(f, Point{Integer(0), Integer(3)}), Rational(1, 5));
  EXPECT_EQ(evaluate(f, Point{Integer(0), Integer(2)}), 2);
  EXPECT_EQ(evaluate(f, Point{Integer(0), Integer(0)}), 1);
}

TEST(Content, Examples) {
  const auto [c1, p1] = content_primitive(parse_poly("6*x + 4", 1));
  EXPECT_EQ(c1, FactoredIdeal::of(Integer(2)));
  EXPECT_EQ(p1, parse_poly("3*x + 2", 1));
  const auto [c2, p2] = content_primitive(parse_poly("5*x + 3", 1));
  EXPECT_TRUE(c2.is_unit());
  EXPECT_EQ(p2, parse_poly("5*x + 3", 1));
  const auto [c3, p3] = content_primitive(parse_poly("x^2*y^5", 2));
  EXPECT_TRUE(c3.is_unit());
  EXPECT_THROW(content_primitive(parse_poly("x/2", 1)), DomainError);
}

TEST(MonomialSequence, Examples) {
  const MonomialSequence a(Exponent{1, 3}, 3);
  ASSERT_EQ(a.size(), 7u);
  const std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}};
  EXPECT_EQ(a.monomials(), expected);
  EXPECT_EQ(MonomialSequence(Exponent{2, 2}, std::nullopt).size(), 9u);

  // Count i <= (5,5), |i| <= 5 explicitly.
  std::size_t count = 0;
  for (unsigned i = 0; i <= 5; ++i)
    for (unsigned j = 0; j <= 5; ++j) count += (i + j <= 5);
  EXPECT_EQ(count, 21u);
  EXPECT_EQ(MonomialSequence(Exponent{5, 5}, 5).size(), count);
}

TEST(MonomialSequence, CoefficientsRoundTrip) {
  const MonomialSequence ms(Exponent{1, 3}, 3);
  const Poly f = parse_poly(kWorked, 2);
  EXPECT_EQ(ms.to_poly(ms.coefficients(f)), f);
  EXPECT_THROW(ms.coefficients(parse_poly("x^2", 2)), DomainError);
}

TEST(MonomialSequence, GradedOrderProperties) {
  for (const auto& [m, k] : std::vector<std::pair<Exponent, unsigned>>{{{3, 2, 1}, 4}, {{2, 2}, 3}, {{4}, 4}}) {
    const MonomialSequence ms(m, k);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      EXPECT_TRUE(componentwise_le(ms[j], m));
      EXPECT_LE(ms[j].weight(), k);
      if (j) {
        EXPECT_LE(ms[j - 1].weight(), ms[j].weight());
      }
      EXPECT_EQ(ms.index_of(ms[j]), j);
    }
  }
}

TEST(Type, Normalize) {
  EXPECT_EQ(normalize_type(Exponent{5, 5}, 3), (PolyType{Exponent{3, 3}, 3}));
  EXPECT_EQ(normalize_type(Exponent{1, 2}, 9), (PolyType{Exponent{1, 2}, 3}));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(7, 2), 21);
  EXPECT_EQ(binomial(3, 5), 0);
}
