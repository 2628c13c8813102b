#include "fixdiv/factorials.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fixdiv;

namespace {

FactoredIdeal id(long g) { return FactoredIdeal::of(Integer(g)); }

const SetSpec& z_2z() {
  static const SetSpec s = parse_set("Z x 2Z");
  return s;
}

/// max over r, s of v(Delta(a_0..a_r)) - v(minor_s(a_0..a_{r-1})), with both
/// determinants computed from scratch.
long literal_minor_gamma(const SetSpec& s, const Integer& p, const Exponent& m, unsigned k) {
  const MonomialSequence ms(m, k);
  const auto ord = nu_m_ordering(s, p, ms, ms.size());
  long best = 0;
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const std::vector<Point> head(ord.points.begin(), ord.points.begin() + static_cast<long>(r + 1));
    const long top = oracle::val(p, oracle::naive_delta(ms, head));
    for (std::size_t col = 0; col <= r; ++col) {
      std::vector<std::vector<Rational>> minor(r, std::vector<Rational>());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
          if (j == col) continue;
          Integer v = 1;
          for (std::size_t t = 0; t < m.size(); ++t)
            for (unsigned e = 0; e < ms[j][t]; ++e) v *= ord.points[i][t];
          minor[i].push_back(v);
        }
      const Rational d = oracle::gauss_det(minor);
      if (d != 0) best = std::max(best, top - oracle::val(p, d));
    }
  }
  return best;
}

}  // namespace

TEST(Bhargava, Examples) {
  Integer fact = 1;
  for (unsigned k = 0; k <= 10; ++k) {
    if (k) fact *= k;
    EXPECT_EQ(bhargava_factorial(CoordSet::full(), k), FactoredIdeal::of(fact)) << k;
  }
  EXPECT_EQ(bhargava_factorial(CoordSet::progression(Integer(2), Integer(0)), 2), id(8));
  EXPECT_EQ(bhargava_factorial(CoordSet::progression(Integer(3), Integer(1)), 3), id(27 * 6));
  EXPECT_EQ(bhargava_factorial(CoordSet::progression(Integer(4), Integer(2)), 4), id(256 * 24));
}

TEST(Bhargava, UnionOfClasses) {
  // {3Z+1 u 3Z+2}: the 3-adic part comes from a two-class set.
  const auto c = CoordSet::union_of(Integer(3), {Integer(1), Integer(2)});
  for (unsigned k = 0; k <= 6; ++k) {
    const long v = oracle::greedy_vals(c, Integer(3), k + 1, 200).back();
    const long got = bhargava_factorial(c, k).exponent(Integer(3)).value();
    EXPECT_EQ(got, v) << k;
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_product(z_2z(), Exponent{2, 2}, 3), id(8));
  EXPECT_EQ(gamma_product(z_2z(), Exponent{3, 2}, 3), id(24));
  EXPECT_EQ(gamma_product(z_2z(), Exponent{2, 1}, 3), id(4));
}

TEST(Gamma, LocalExamples) {
  EXPECT_EQ(gamma_local(z_2z(), Integer(2), Exponent{2, 2}, 3), Valuation(3));
  EXPECT_EQ(gamma_local(z_2z(), Integer(3), Exponent{3, 0}, 3), Valuation(1));
  for (int p : {2, 3, 5}) EXPECT_EQ(gamma_local(parse_set("Z x Z x Z"), Integer(p), Exponent{0, 0, 0}, 0), Valuation(0));
}

TEST(Gamma, FromLocalMatchesProduct) {
  EXPECT_EQ(gamma_from_local(z_2z(), Exponent{2, 2}, 3), id(8));
  EXPECT_EQ(gamma_from_local(z_2z(), Exponent{3, 1}, 3), id(12));
}

TEST(Evrard, Examples) {
  EXPECT_EQ(evrard_factorial(z_2z(), 3), id(48));
  EXPECT_EQ(evrard_factorial(parse_set("Z x Z"), 5), id(120));
  EXPECT_TRUE(evrard_factorial(z_2z(), 0).is_unit());
}

TEST(MFactorial, Examples) {
  EXPECT_EQ(m_factorial(z_2z(), Exponent{2, 2}), id(16));
  EXPECT_EQ(m_factorial(parse_set("Z x Z"), Exponent{5, 5}), id(14400));
  EXPECT_TRUE(m_factorial(parse_set("Z"), Exponent{0}).is_unit());
  EXPECT_THROW(m_factorial(parse_set("Z"), Exponent{1, 1}), DomainError);
}

TEST(Gamma, LargeMGivesEvrard) {
  // Gamma_{m,k} = k!_S once every m_i >= k.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const SetSpec s = oracle::random_set(rng, 1 + rng() % 2, 4);
    const unsigned k = rng() % 5;
    Exponent m(s.dimension());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = k + rng() % 3;
    EXPECT_EQ(gamma_product(s, m, k), evrard_factorial(s, k)) << s.to_string() << " k=" << k;
  }
}

TEST(GammaProperties, ProductLocalAndMinorsAgree) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 2;
    const SetSpec s = oracle::random_set(rng, n, 4);
    Exponent m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = rng() % 4;
    const unsigned k = rng() % 7;
    const PolyType nt = normalize_type(m, k);
    const FactoredIdeal prod = gamma_product(s, m, k);
    for (const auto& p : gamma_prime_support(s, m, k)) {
      const long local = gamma_local(s, p, m, k).value();
      EXPECT_EQ(local, prod.exponent(p).value()) << s.to_string() << " p=" << p << " m=" << m.to_string() << " k=" << k;
      if (t < 30) {
        EXPECT_EQ(literal_minor_gamma(s, p, nt.m, nt.k), local);
      }
    }
  }
}

TEST(GammaProperties, LawOfProgressions) {
  for (long a = 1; a <= 4; ++a)
    for (long b = 0; b < a; ++b)
      for (unsigned k = 0; k <= 8; ++k) {
        Integer expected = pow(Integer(a), k);
        for (unsigned i = 2; i <= k; ++i) expected *= i;
        EXPECT_EQ(bhargava_factorial(CoordSet::progression(Integer(a), Integer(b)), k), FactoredIdeal::of(expected));
      }
}

TEST(CoordinateFactorials, MatchProductFactorial) {
  const SetSpec s = parse_set("Z x 3Z+1");
  const Exponent m{3, 3};
  const CoordinateFactorials facts(s, m, gamma_prime_support(s, m, 6));
  for (const auto& i : admissible_exponents(m, 6)) EXPECT_EQ(facts.factorial(i), product_factorial(s, i));
}
