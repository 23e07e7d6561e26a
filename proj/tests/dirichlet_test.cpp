#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "eulerid/dirichlet.hpp"

namespace eulerid {
namespace {

using Z = CyclotomicNumber;

TEST(UnitGroupBasis, Examples) {
  EXPECT_TRUE(unit_group_basis(2).generators.empty());
  auto b4 = unit_group_basis(4);
  EXPECT_EQ(b4.generators, std::vector<unsigned>{3});
  EXPECT_EQ(b4.orders, std::vector<unsigned>{2});
  auto b8 = unit_group_basis(8);
  EXPECT_EQ(b8.generators, (std::vector<unsigned>{7, 5}));
  EXPECT_EQ(b8.orders, (std::vector<unsigned>{2, 2}));
  auto b12 = unit_group_basis(12);
  std::multiset<unsigned> orders(b12.orders.begin(), b12.orders.end());
  EXPECT_EQ(orders, (std::multiset<unsigned>{2, 2}));
  EXPECT_THROW(unit_group_basis(0), PreconditionError);
}

TEST(UnitGroupBasis, GeneratesTheUnitGroup) {
  for (unsigned d = 1; d <= 60; ++d) {
    const auto b = unit_group_basis(d);
    unsigned product = 1;
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
      product *= b.orders[i];
      EXPECT_EQ(multiplicative_order(b.generators[i], d), b.orders[i]) << d;
    }
    EXPECT_EQ(product, euler_phi(d)) << d;
    EXPECT_EQ(discrete_logs(b).size(), euler_phi(d)) << d;
  }
}

TEST(Characters, Counts) {
  EXPECT_EQ(enumerate_characters(4).size(), 2u);
  EXPECT_EQ(enumerate_characters(12).size(), 4u);
  const auto mod8 = enumerate_characters(8);
  ASSERT_EQ(mod8.size(), 4u);
  for (const auto& chi : mod8)
    for (const auto& v : chi.values())
      EXPECT_TRUE(v == Z(0) || v == Z(1) || v == Z(-1));
}

TEST(Characters, InvariantsUpTo24) {
  for (unsigned d = 1; d <= 24; ++d) {
    const auto chars = enumerate_characters(d);
    ASSERT_EQ(chars.size(), euler_phi(d)) << d;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const auto& chi = chars[i];
      EXPECT_EQ(chi.index(), i);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(chars[j].values() == chi.values()) << d;
      EXPECT_EQ(chi(1), Z(1));
      const unsigned m = chi.value_order();
      Z sum = Z::rational(m, Rational(0));
      for (unsigned a = 0; a < d; ++a) {
        sum += chi(a);
        EXPECT_EQ(chi(a).is_zero(), std::gcd(a, d) != 1 && d > 1) << d << " " << a;
        if (std::gcd(a, d) != 1) continue;
        // chi(a)^m == 1
        Z power = Z::rational(m, Rational(1));
        for (unsigned k = 0; k < m; ++k) power *= chi(a);
        EXPECT_EQ(power, Z(1));
        for (unsigned b = 0; b < d; ++b)
          if (std::gcd(b, d) == 1) { EXPECT_EQ(chi(static_cast<long long>(a) * b % d), chi(a) * chi(b)); }
      }
      EXPECT_EQ(sum, chi.is_principal() ? Z(Rational(euler_phi(d))) : Z(0)) << d << " " << i;
      EXPECT_NE(chi.conductor() % 4, 2u) << d;
      EXPECT_EQ(d % chi.conductor(), 0u);
    }
  }
}

TEST(Characters, EvaluationAndPeriodicity) {
  const auto chi = character_at(4, 1);
  EXPECT_EQ(char_eval(chi, 2), Z(0));
  EXPECT_EQ(char_eval(chi, 3), Z(-1));
  EXPECT_EQ(char_eval(chi, 7), Z(-1));
  EXPECT_EQ(char_eval(chi, -1), Z(-1));
  EXPECT_EQ(chi.parity(), -1);
  EXPECT_THROW(character_at(4, 2), PreconditionError);
}

TEST(Characters, RandomMultiplicativity) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (unsigned d : {5u, 7u, 9u, 13u, 16u, 20u, 21u}) {
    for (const auto& chi : enumerate_characters(d)) {
      for (int i = 0; i < 20; ++i) {
        const long long a = dist(gen), b = dist(gen);
        EXPECT_EQ(char_eval(chi, a) * char_eval(chi, b), char_eval(chi, a * b));
      }
    }
  }
}

TEST(Conductor, Examples) {
  const auto mod4 = enumerate_characters(4);
  EXPECT_EQ(conductor(mod4[0]), 1u);
  EXPECT_EQ(conductor(mod4[1]), 4u);
  // The character mod 8 with chi(3) = -1, chi(5) = 1 is induced from the one mod 4.
  const auto mod8 = enumerate_characters(8);
  const auto induced = std::find_if(mod8.begin(), mod8.end(), [](const auto& chi) {
    return chi(3) == Z(-1) && chi(5) == Z(1);
  });
  ASSERT_NE(induced, mod8.end());
  EXPECT_EQ(conductor(*induced), 4u);
  std::multiset<unsigned> conductors12;
  for (const auto& chi : enumerate_characters(12)) conductors12.insert(chi.conductor());
  EXPECT_EQ(conductors12, (std::multiset<unsigned>{1, 3, 4, 12}));
}

TEST(Characters, ComplexValuesMod5) {
  const auto chars = enumerate_characters(5);
  ASSERT_EQ(chars.size(), 4u);
  EXPECT_EQ(chars[0].value_order(), 4u);
  // Generator 2; chi_1(2) = zeta_4.
  EXPECT_EQ(chars[1](2), Z::root_of_unity(4, 1));
  EXPECT_FALSE(chars[1](2).is_rational());
}

TEST(Factorize, Basic) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].value, 8u);
  EXPECT_EQ(f[1].value, 9u);
  EXPECT_EQ(f[2].value, 5u);
  EXPECT_EQ(euler_phi(360), 96u);
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_FALSE(is_prime(1));
}

}  // namespace
}  // namespace eulerid
