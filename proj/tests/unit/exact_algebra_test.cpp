#include <gtest/gtest.h>

#include <random>

#include "deutsch/counting.hpp"
#include "deutsch/formulas.hpp"
#include "deutsch/substitution.hpp"
#include "test_util.hpp"

namespace deutsch {
namespace {

using testing::ints;

PolyV P(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long x : c) v.emplace_back(x);
  return PolyV(std::move(v));
}

// Number of words in {0,1,2}^n with letter sum k.
BigInt trinomial_by_words(int n, int k) {
  long count = 0;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long w = 0; w < total; ++w) {
    long x = w;
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += static_cast<int>(x % 3);
      x /= 3;
    }
    count += (s == k);
  }
  return count;
}

TEST(Polynomial, CanonicalFormDropsTrailingZeros) {
  PolyV p = P({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(PolyV().is_zero());
  EXPECT_EQ(PolyV().degree(), -1);
  EXPECT_TRUE((P({1, 1}) - P({1, 1})).coefficients().empty());
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    PolyV a = testing::random_poly(rng, 7);
    PolyV b = testing::random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(P({1}), PolyV()), AlgebraError);
}

TEST(Polynomial, GcdOfOneMinusPowers) {
  // gcd(1 - v^4, 1 - v^6) = 1 - v^2, returned monic as v^2 - 1.
  PolyV g = gcd(one_minus_power<BigRat>(4), one_minus_power<BigRat>(6));
  EXPECT_EQ(g, P({-1, 0, 1}));
  EXPECT_EQ(gcd(PolyV(), PolyV()), PolyV());
  EXPECT_EQ(gcd(P({0, 3}), PolyV()), P({0, 1}));
}

TEST(RationalFunction, GeometricSumIsPolynomial) {
  // (1 - v^3)/(1 - v) = 1 + v + v^2
  RatFnV f(one_minus_power<BigRat>(3), one_minus_power<BigRat>(1));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), P({1, 1, 1}));
}

TEST(RationalFunction, CanonicalInvariants) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    RatFnV a = testing::random_analytic(rng);
    RatFnV b = testing::random_analytic(rng);
    for (const RatFnV& f : {a + b, a - b, a * b}) {
      EXPECT_EQ(f.den().leading(), 1);
      EXPECT_EQ(gcd(f.num(), f.den()).degree(), f.num().is_zero() ? f.den().degree() : 0);
    }
    if (!a.is_zero()) {
      EXPECT_EQ(a / a, RatFnV(1));
      EXPECT_EQ((a * b) / a, b);
    }
    EXPECT_EQ(a - a, RatFnV());
  }
  EXPECT_THROW(RatFnV(1) / RatFnV(), AlgebraError);
  EXPECT_THROW(RatFnV(P({1}), PolyV()), AlgebraError);
}

TEST(RationalFunction, EvaluateMatchesArithmetic) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    RatFnV a = testing::random_analytic(rng);
    RatFnV b = testing::random_analytic(rng);
    const BigRat x = make_rat(1, 7);
    BigRat lhs = (a * b + a).evaluate(x);
    BigRat rhs = a.evaluate(x) * b.evaluate(x) + a.evaluate(x);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Trinomial, Examples) {
  EXPECT_EQ(trinomial(0, 0), 1);
  EXPECT_EQ(trinomial(3, 3), 7);
  EXPECT_EQ(trinomial(3, 2), 6);
  EXPECT_EQ(trinomial(5, -1), 0);
  EXPECT_EQ(trinomial(2, 5), 0);
  EXPECT_EQ(trinomial_row(3), ints({1, 3, 6, 7, 6, 3, 1}));
}

TEST(Trinomial, MatchesWordCountingOracle) {
  for (int n = 0; n <= 8; ++n)
    for (int k = -1; k <= 2 * n + 1; ++k) EXPECT_EQ(trinomial(n, k), trinomial_by_words(n, k)) << n << "," << k;
}

TEST(Trinomial, RowIdentitiesUpTo50) {
  const TrinomialTable table(50);
  for (std::size_t n = 0; n <= 50; ++n) {
    const auto& row = table.row(n);
    ASSERT_EQ(row.size(), 2 * n + 1);
    EXPECT_EQ(row, trinomial_row(n)) << "recurrence row differs from product row at n=" << n;
    BigInt sum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      EXPECT_EQ(row[k], row[2 * n - k]);
      sum += row[k];
    }
    EXPECT_EQ(sum, pow_int(3, n));
  }
  // Motzkin numbers as trinomial differences, checked against Motzkin DP.
  const auto walk = strip_walk(Family::motzkin, 50, 50);
  for (std::size_t n = 0; n <= 50; ++n) {
    const long nn = static_cast<long>(n);
    EXPECT_EQ(table(n, nn) - table(n, nn - 2), walk[n][0]) << n;
  }
}

TEST(SubstitutionSeries, VOfZIsShiftedMotzkin) {
  const SeriesZ v = v_of_z(12);
  const std::vector<long> expect{0, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
  for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(v[k], expect[k]) << k;
}

TEST(SubstitutionSeries, DefiningEquation) {
  const std::size_t order = 60;
  const SeriesZ v = v_of_z(order);
  const SeriesZ z = SeriesZ::variable(order);
  const SeriesZ one = SeriesZ::constant(1, order);
  EXPECT_TRUE((z * (one + v + v * v) - v).is_zero());
}

TEST(SubstitutionSeries, ReconstructsZ) {
  // v/(1+v+v^2) composed with v(z) is exactly z.
  const RatFnV zf = gf::z();
  for (std::size_t order : {0u, 1u, 5u, 50u, 200u}) {
    const SeriesZ s = expand_in_z(zf, order);
    EXPECT_EQ(s, SeriesZ::variable(order)) << order;
  }
}

TEST(ExpandInZ, Examples) {
  const SeriesZ m = expand_in_z(RatFnV(P({1, 1, 1})), 6);
  const std::vector<long> motzkin{1, 1, 2, 4, 9, 21, 51};
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(m[k], motzkin[k]);

  const SeriesZ closed = expand_in_z(RatFnV(P({1, 1, 1}), P({1, 1})), 9);
  const std::vector<long> closed_counts{1, 0, 1, 1, 3, 6, 15, 36, 91, 232};
  for (std::size_t k = 0; k <= 9; ++k) EXPECT_EQ(closed[k], closed_counts[k]);

  const SeriesZ one = expand_in_z(RatFnV(1), 5);
  EXPECT_EQ(one, SeriesZ::constant(1, 5));
}

TEST(ExpandInZ, PoleAtOriginRejected) {
  try {
    expand_in_z(RatFnV(P({1}), P({0, 1})), 4);
    FAIL() << "expected PoleAtOrigin";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraError::Kind::PoleAtOrigin);
  }
  EXPECT_THROW(expand_in_v(RatFnV(P({1}), P({0, 0, 1})), 4), AlgebraError);
}

TEST(ExpandInZ, NonUnitDenominatorStaysExact) {
  // 1/(2 - v) has non-integer coefficients; both routes must agree.
  const RatFnV f(P({1}), P({2, -1}));
  const SeriesZ a = expand_in_z(f, 15);
  EXPECT_EQ(a, expand_via_lagrange(f, 15));
  EXPECT_EQ(a[0], make_rat(1, 2));
}

TEST(ExpandInZ, TwoPipelinesAgreeOnRandomInputs) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const RatFnV f = testing::random_analytic(rng);
    EXPECT_EQ(expand_in_z(f, 25), expand_via_lagrange(f, 25)) << f.to_string();
  }
}

TEST(SeriesArith, MinimumOrderAndUnknownCoefficients) {
  const SeriesZ a = SeriesZ::constant(1, 10);
  const SeriesZ b = SeriesZ::variable(4);
  EXPECT_EQ((a + b).order(), 4u);
  EXPECT_EQ((a * b).order(), 4u);
  EXPECT_EQ((a / (a + b)).order(), 4u);
  EXPECT_THROW((void)(a * b)[5], AlgebraError);
}

TEST(SeriesArith, Examples) {
  const std::size_t order = 30;
  const SeriesZ m = expand_in_z(RatFnV(P({1, 1, 1})), order);
  EXPECT_TRUE((m * SeriesZ(order)).is_zero());

  const SeriesZ z = SeriesZ::variable(order);
  const SeriesZ one = SeriesZ::constant(1, order);
  EXPECT_EQ(m, one + z * m + z * z * m * m);

  // (2 z v + z - 1)^2 = 1 - 2z - 3z^2
  const SeriesZ v = v_of_z(order);
  const SeriesZ two = SeriesZ::constant(2, order);
  const SeriesZ lhs = (two * z * v + z - one) * (two * z * v + z - one);
  const SeriesZ rhs = SeriesZ::from_polynomial(P({1, -2, -3}), order);
  EXPECT_EQ(lhs, rhs);
}

TEST(SeriesArith, DivisionNeedsUnitConstant) {
  EXPECT_THROW(SeriesZ::constant(1, 3) / SeriesZ::variable(3), AlgebraError);
  EXPECT_THROW(IntSeries::constant(1, 3) / IntSeries::constant(2, 3), AlgebraError);
  const SeriesZ q = SeriesZ::constant(1, 3) / SeriesZ::constant(2, 3);
  EXPECT_EQ(q[0], make_rat(1, 2));
}

TEST(SeriesArith, DivisionInvertsMultiplication) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const SeriesZ a = SeriesZ::from_polynomial(testing::random_poly(rng, 6), 12);
    PolyV bp = testing::random_poly(rng, 6);
    if (bp[0] == 0) continue;
    const SeriesZ b = SeriesZ::from_polynomial(bp, 12);
    EXPECT_EQ((a / b) * b, a);
  }
}

TEST(SeriesArith, CountingSeriesHaveNonnegativeIntegerCoefficients) {
  using K = FormulaId::Kind;
  for (K kind : {K::motzkin_M, K::phi0_limit, K::open_sum_limit, K::area_A, K::height_sum_closed, K::height_sum_open}) {
    const SeriesZ s = formula_series({kind}, 40);
    for (std::size_t k = 0; k <= 40; ++k) {
      EXPECT_TRUE(is_integer(s[k]));
      EXPECT_GE(s[k], 0);
    }
  }
  for (int h = 0; h <= 6; ++h)
    for (int i = 0; i <= h; ++i) {
      const SeriesZ s = formula_series({K::phi, h, i}, 30);
      for (std::size_t k = 0; k <= 30; ++k) EXPECT_TRUE(is_integer(s[k]) && s[k] >= 0);
    }
}

}  // namespace
}  // namespace deutsch
