#include <gtest/gtest.h>

#include <random>

#include "udyn/error.hpp"
#include "udyn/padic.hpp"
#include "udyn/quad.hpp"
#include "udyn/rational.hpp"
#include "udyn/sqrt_class.hpp"
#include "udyn/valuation.hpp"

using namespace udyn;

namespace {

Valuation v(std::int64_t n) { return Valuation::of_int(n); }
Valuation half(std::int64_t twice) { return Valuation(HalfInt::from_twice(twice)); }

}  // namespace

TEST(Rational, CanonicalForm) {
  const BigRational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(BigRational::parse("-3/2"), q);
  EXPECT_EQ(BigRational::parse("0/5").to_string(), "0");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(BigRational::parse("1/0"), Error);
  EXPECT_THROW(BigRational::parse("1.5"), Error);
  EXPECT_THROW(BigRational::parse(""), Error);
  EXPECT_THROW(BigRational::parse("2/x"), Error);
}

TEST(Rational, PowersOfP) {
  EXPECT_EQ(pow_p(3, 2), BigRational(9));
  EXPECT_EQ(pow_p(3, -2), BigRational(BigInt(1), BigInt(9)));
  EXPECT_EQ(BigRational(2).pow(-3), BigRational(BigInt(1), BigInt(8)));
}

TEST(Valuation, IntegerExamples) {
  EXPECT_EQ(vp_int(BigInt(45), 3), 2);
  EXPECT_EQ(vp_int(BigInt(1), 5), 0);
  EXPECT_EQ(vp_int(BigInt(-8), 2), 3);
}

TEST(Valuation, RationalExamples) {
  EXPECT_EQ(vp_rat(BigRational::parse("7/12"), 2), v(-2));
  EXPECT_TRUE(vp_rat(BigRational(0), 3).is_top());
  EXPECT_EQ(vp_rat(BigRational(9), 3), v(2));
}

TEST(Valuation, TopIsAboveEverything) {
  EXPECT_GT(Valuation::top(), v(1000));
  EXPECT_EQ(Valuation::top() + v(3), Valuation::top());
  EXPECT_EQ(half(1) + half(1), v(1));
}

TEST(HalfInt, ParseAndHalve) {
  EXPECT_EQ(HalfInt::parse("-5/2").twice(), -5);
  EXPECT_EQ(HalfInt::parse("3").twice(), 6);
  EXPECT_EQ(HalfInt::from_int(3).halved(), HalfInt::from_twice(3));
  EXPECT_THROW(HalfInt::from_twice(3).halved(), Error);
  EXPECT_EQ(HalfInt::from_twice(-3).floor(), -2);
}

TEST(Primes, SmallCases) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(Quad, SpecExamples) {
  const BigRational two(2);
  EXPECT_EQ(quad_norm(QuadExt(1, 1, two)), BigRational(-1));
  const QuadExt t(0, 1, two);
  const QuadExt sq = quad_mul(t, t);
  EXPECT_EQ(sq.u(), two);
  EXPECT_EQ(sq.v(), BigRational(0));
  const QuadExt inv = quad_inv(t);
  EXPECT_EQ(inv.u(), BigRational(0));
  EXPECT_EQ(inv.v(), BigRational(BigInt(1), BigInt(2)));
}

TEST(Quad, InverseOfZeroNormThrows) {
  const QuadExt x(2, 1, BigRational(4));
  try {
    quad_inv(x);
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisor);
  }
}

TEST(Quad, ValuationExamples) {
  const BigRational two(2);
  EXPECT_EQ(quad_val(QuadExt(0, 1, two), 2), half(1));
  EXPECT_EQ(quad_val(QuadExt(3, 0, two), 3), v(1));
  EXPECT_EQ(quad_val(QuadExt(1, 1, two), 5), v(0));
}

TEST(Quad, ValuationNeedsNonSquare) {
  try {
    quad_val(QuadExt(1, 1, BigRational(17)), 2);
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidExtension);
  }
}

TEST(Quad, ParseForms) {
  const BigRational a(2);
  const QuadExt x = parse_quad("1/2-3*sqrt(a)", a);
  EXPECT_EQ(x.u(), BigRational(BigInt(1), BigInt(2)));
  EXPECT_EQ(x.v(), BigRational(-3));
  EXPECT_EQ(parse_quad("sqrt(2)", a).v(), BigRational(1));
  EXPECT_THROW(parse_quad("sqrt(3)", a), Error);
}

TEST(SqrtClass, SpecExamples) {
  const SqrtClass four = sqrt_class(BigRational(4), 3);
  EXPECT_EQ(four.kind, SqrtKind::RationalSquare);
  ASSERT_TRUE(four.root);
  EXPECT_EQ(*four.root, BigRational(2));
  EXPECT_EQ(sqrt_class(BigRational(2), 5).kind, SqrtKind::QpNonSquare);
  EXPECT_EQ(sqrt_class(BigRational(17), 2).kind, SqrtKind::QpSquareNotRational);
}

TEST(SqrtClass, SixIsAFiveAdicSquare) {
  // 6 = 1 mod 5 and 1 is a square mod 5.
  EXPECT_EQ(sqrt_class(BigRational(6), 5).kind, SqrtKind::QpSquareNotRational);
  const TruncatedPadic r = hensel_sqrt(BigRational(6), 5, 20);
  EXPECT_TRUE((r * r).agrees_with(BigRational(6)));
}

TEST(SqrtClass, OddValuationIsNonSquare) {
  EXPECT_EQ(sqrt_class(BigRational(3), 3).kind, SqrtKind::QpNonSquare);
  EXPECT_EQ(sqrt_class(BigRational(BigInt(1), BigInt(2)), 2).kind, SqrtKind::QpNonSquare);
  EXPECT_EQ(sqrt_class(BigRational(5), 2).kind, SqrtKind::QpNonSquare);  // 5 = 5 mod 8
  EXPECT_EQ(sqrt_class(BigRational(BigInt(9), BigInt(4)), 7).kind, SqrtKind::RationalSquare);
}

TEST(Hensel, SeventeenOverTwoAdics) {
  const TruncatedPadic r = hensel_sqrt(BigRational(17), 2, 6);
  EXPECT_EQ(r.leading_valuation(), 0);
  EXPECT_GE(r.known_precision(), 6);
  EXPECT_TRUE((r * r).agrees_with(BigRational(17)));
}

TEST(Hensel, Preconditions) {
  EXPECT_THROW(hensel_sqrt(BigRational(9), 5, 10), Error);
  EXPECT_THROW(hensel_sqrt(BigRational(2), 5, 10), Error);
  EXPECT_THROW(hensel_sqrt(BigRational(6), 5, 0), Error);
}

TEST(Hensel, EvenValuationNonUnit) {
  // 7 * 9 mod 3-adics: 63 = 9 * 7, 7 = 1 mod 3.
  const TruncatedPadic r = hensel_sqrt(BigRational(63), 3, 30);
  EXPECT_EQ(r.valuation(), v(1));
  EXPECT_TRUE((r * r).agrees_with(BigRational(63)));
}

TEST(TruncatedPadic, CancellationExhaustsPrecision) {
  const TruncatedPadic x = TruncatedPadic::from_rational(BigRational(1), 3, 5);
  const TruncatedPadic y = TruncatedPadic::from_rational(BigRational(1 + 243), 3, 5);
  const TruncatedPadic d = x - y;
  EXPECT_TRUE(d.is_inexact_zero());
  try {
    (void)d.valuation();
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionExhausted);
  }
}

TEST(TruncatedPadic, ExactZeroStaysExact) {
  const TruncatedPadic z = TruncatedPadic::exact_zero(5);
  EXPECT_TRUE(z.valuation().is_top());
  EXPECT_TRUE((z * TruncatedPadic::from_rational(BigRational(7), 5, 10)).is_exact_zero());
}

TEST(TruncatedPadic, ArithmeticMatchesRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 200; ++i) {
    long n1 = d(rng), n2 = d(rng), d1 = d(rng), d2 = d(rng);
    if (d1 == 0 || d2 == 0 || n1 == 0 || n2 == 0) continue;
    const BigRational x{BigInt(n1), BigInt(d1)};
    const BigRational y{BigInt(n2), BigInt(d2)};
    const auto tx = TruncatedPadic::from_rational(x, 7, 40);
    const auto ty = TruncatedPadic::from_rational(y, 7, 40);
    EXPECT_TRUE((tx * ty).agrees_with(x * y));
    EXPECT_TRUE((tx / ty).agrees_with(x / y));
    const auto s = tx + ty;
    if (!s.is_inexact_zero()) {
      EXPECT_TRUE(s.agrees_with(x + y));
    }
  }
}

// Property: valuations are multiplicative and ultrametric on random rationals.
class Ultrametric : public ::testing::TestWithParam<long> {};

TEST_P(Ultrametric, RandomPairs) {
  const long p = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 7919u);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    long n1 = d(rng), n2 = d(rng), d1 = d(rng), d2 = d(rng);
    if (d1 == 0 || d2 == 0) continue;
    const BigRational x = BigRational(BigInt(n1), BigInt(d1)) * pow_p(p, d(rng) % 4);
    const BigRational y{BigInt(n2), BigInt(d2)};
    const Valuation vx = vp_rat(x, p), vy = vp_rat(y, p);
    EXPECT_EQ(vp_rat(x * y, p), vx + vy);
    const Valuation vs = vp_rat(x + y, p);
    EXPECT_GE(vs, std::min(vx, vy));
    if (vx != vy) {
      EXPECT_EQ(vs, std::min(vx, vy));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, Ultrametric, ::testing::Values(2L, 3L, 5L, 7L));
