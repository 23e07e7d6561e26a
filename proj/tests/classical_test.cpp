#include <vector>

#include "gtest/gtest.h"

#include "eulerid/classical.hpp"

namespace eulerid {
namespace {

using Q = Rational;
using Poly = RationalPolynomial;

Q q(long n, long d = 1) { return Q(n, d); }

// Akiyama-Tanigawa: yields B_n with B_1 = +1/2; the sign of B_1 is flipped here.
std::vector<Q> akiyama_tanigawa(unsigned max_n) {
  std::vector<Q> out, a(max_n + 1);
  for (unsigned m = 0; m <= max_n; ++m) {
    a[m] = q(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Q(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (max_n >= 1) out[1] = -out[1];
  return out;
}

TEST(Binomial, PascalValues) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
  EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli_number(0), q(1));
  EXPECT_EQ(bernoulli_number(1), q(-1, 2));
  EXPECT_EQ(bernoulli_number(12), q(-691, 2730));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  const auto oracle = akiyama_tanigawa(40);
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli_number(n), oracle[n]) << n;
}

TEST(Bernoulli, Polynomials) {
  EXPECT_EQ(bernoulli_poly(0), Poly(q(1)));
  EXPECT_EQ(bernoulli_poly(2), Poly({q(1, 6), q(-1), q(1)}));
  for (unsigned n = 0; n <= 20; ++n) {
    EXPECT_EQ(bernoulli_poly(n).degree(), static_cast<int>(n));
    EXPECT_EQ(bernoulli_poly(n)(q(0)), bernoulli_number(n));
  }
}

TEST(Bernoulli, Telescoping) {
  EXPECT_EQ(bernoulli_poly(1)(q(1)) - bernoulli_poly(1)(q(0)), q(1));
  for (unsigned n = 2; n <= 25; ++n) EXPECT_EQ(bernoulli_poly(n)(q(1)) - bernoulli_poly(n)(q(0)), q(0)) << n;
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_number(0), q(1));
  EXPECT_EQ(euler_number(1), q(-1, 2));
  EXPECT_EQ(euler_number(2), q(0));
  EXPECT_EQ(euler_number(3), q(1, 4));
  EXPECT_EQ(euler_number(5), q(-1, 2));
  EXPECT_EQ(euler_number(7), q(17, 8));
}

TEST(Euler, MatchesBernoulliClosedForm) {
  // E_n = -2 (2^{n+1} - 1) B_{n+1} / (n+1), n >= 1, with B from the independent oracle.
  const auto b = akiyama_tanigawa(41);
  for (unsigned n = 1; n <= 40; ++n) {
    const Q expected = q(-2) * Q(ipow(Integer(2), n + 1) - 1) * b[n + 1] / Q(n + 1);
    EXPECT_EQ(euler_number(n), expected) << n;
  }
}

TEST(Euler, Polynomials) {
  EXPECT_EQ(euler_poly(0), Poly(q(1)));
  EXPECT_EQ(euler_poly(1), Poly({q(-1, 2), q(1)}));
  for (unsigned n = 0; n <= 15; ++n) {
    const Poly e = euler_poly(n);
    // E_n(x + 1) + E_n(x) = 2 x^n, symbolically
    EXPECT_EQ(compose_affine(e, q(1), q(1)) + e, Poly::monomial(q(2), n)) << n;
  }
}

TEST(Genocchi, Examples) {
  EXPECT_TRUE(genocchi_poly(0).is_zero());
  EXPECT_EQ(genocchi_poly(1), Poly(q(1)));
  EXPECT_EQ(genocchi_poly(4)(q(0)), q(1));
  const std::vector<Q> expected{q(0), q(1), q(-1), q(0), q(1), q(0), q(-3), q(0), q(17)};
  for (unsigned n = 0; n < expected.size(); ++n) EXPECT_EQ(genocchi_number(n), expected[n]) << n;
}

TEST(Genocchi, MatchesBernoulliClosedForm) {
  // G_n = 2 (1 - 2^n) B_n
  const auto b = akiyama_tanigawa(40);
  for (unsigned n = 0; n <= 40; ++n)
    EXPECT_EQ(genocchi_number(n), q(2) * Q(1 - ipow(Integer(2), n)) * b[n]) << n;
}

TEST(Classical, RecurrenceMatchesGeneratingFunctionsUpTo40) {
  const auto bs = bernoulli_series(41), es = euler_series(41), gs = genocchi_series(41);
  for (unsigned n = 0; n <= 40; ++n) {
    EXPECT_EQ(bernoulli_number(n), series_coeff_factorial(bs, n)) << n;
    EXPECT_EQ(euler_number(n), series_coeff_factorial(es, n)) << n;
    EXPECT_EQ(genocchi_number(n), series_coeff_factorial(gs, n)) << n;
  }
}

TEST(Classical, EulerPolySeriesAgreesAtSamplePoints) {
  for (const Q& x : {q(0), q(1, 3), q(-2), q(5, 2)}) {
    const auto s = euler_poly_series(x, 12);
    for (unsigned n = 0; n < 12; ++n) EXPECT_EQ(series_coeff_factorial(s, n), euler_poly(n)(x));
  }
}

TEST(Classical, AlternatingExponentialQuotientIsEulerSeries) {
  // 2 sum_{l<d} (-1)^{l-1} e^{lt} / (e^{dt} - 1) == 2 / (e^t + 1) for even d
  const std::size_t order = 32;
  const auto target = euler_series(order);
  for (unsigned d : {2u, 4u, 6u, 8u, 10u}) {
    RationalSeries num(order + 1);
    for (unsigned l = 0; l < d; ++l) {
      const Q sign = (l % 2) ? q(2) : q(-2);
      num += sign * series_exp_linear(Q(l), order + 1);
    }
    const auto den = series_exp_linear(Q(d), order + 1) - series_constant(q(1), order + 1);
    const auto quotient = series_div_cancel(num, den);
    ASSERT_EQ(quotient.order(), order);
    EXPECT_EQ(quotient.coeffs(), target.coeffs()) << "d=" << d;
  }
}

TEST(Moment, Examples) {
  EXPECT_EQ(moment(0, 2), q(1));
  EXPECT_EQ(moment(1, 2), q(-1, 2));
  EXPECT_EQ(moment(2, 2), q(0));
  EXPECT_THROW(moment(1, 3), PreconditionError);
  EXPECT_THROW(moment(1, 0), PreconditionError);
}

TEST(Moment, IndependentOfModulus) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned d : {4u, 6u, 8u, 10u}) EXPECT_EQ(moment(n, d), moment(n, 2)) << n << " " << d;
}

TEST(SequenceTable, Kinds) {
  const auto t = sequence_table(SequenceKind::genocchi, 4);
  EXPECT_EQ(t.values.size(), 5u);
  EXPECT_EQ(t.values[2], q(-1));
  EXPECT_EQ(to_string(SequenceKind::euler), "euler");
}

}  // namespace
}  // namespace eulerid
