#include <gtest/gtest.h>

#include <random>

#include "udyn/error.hpp"
#include "udyn/map.hpp"
#include "udyn/params.hpp"
#include "udyn/sampling.hpp"

using namespace udyn;

namespace {

BigRational Q(const char* s) { return BigRational::parse(s); }

MapParams P(long p, const char* a, const char* b, const char* c) { return validate_params(p, Q(a), Q(b), Q(c)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no throw";
  return ErrorKind::InvalidArgument;
}

Radius R(std::int64_t val) { return Radius::from_valuation(HalfInt::from_int(val)); }

}  // namespace

TEST(Params, Validation) {
  EXPECT_EQ(P(3, "9", "3", "1").regime(), Regime::LT);
  EXPECT_EQ(P(3, "4", "1", "3").regime(), Regime::GT);
  EXPECT_EQ(P(5, "2", "1", "3").regime(), Regime::EQ);
  EXPECT_EQ(kind_of([] { P(3, "1", "2", "5"); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { P(5, "4", "1", "2"); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { P(3, "9", "2", "2"); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { P(3, "0", "2", "1"); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { P(6, "2", "1", "3"); }), ErrorKind::InvalidArgument);
}

TEST(Params, SqrtModes) {
  EXPECT_EQ(P(3, "4", "1", "3").sqrt_mode.kind, SqrtKind::RationalSquare);
  EXPECT_EQ(P(3, "2", "1", "3").sqrt_mode.kind, SqrtKind::QpNonSquare);
  EXPECT_EQ(P(5, "6", "1", "2").sqrt_mode.kind, SqrtKind::QpSquareNotRational);
  EXPECT_TRUE(P(2, "2", "2", "1").half_integer_radii());
  EXPECT_FALSE(P(3, "4", "1", "3").half_integer_radii());
}

TEST(EvalF, SpecExamples) {
  const MapParams lt = P(3, "9", "3", "1");
  EXPECT_EQ(std::get<BigRational>(eval_f(Point(Q("9")), lt)), Q("2916/25"));
  EXPECT_EQ(std::get<BigRational>(eval_f(Point(Q("0")), lt)), Q("0"));
  EXPECT_EQ(std::get<BigRational>(eval_f(Point(Q("1")), P(3, "4", "1", "3"))), Q("1"));
  EXPECT_EQ(kind_of([&] { eval_f(Point(Q("-1")), lt); }), ErrorKind::PoleHit);
}

TEST(AbsF, SpecExamples) {
  const MapParams lt = P(3, "9", "3", "1");
  EXPECT_EQ(abs_f(Point(Q("9")), lt), R(6));
  EXPECT_EQ(point_val(eval_f(Point(Q("9")), lt), 3), Valuation::of_int(6));
  EXPECT_EQ(abs_f(Point(Q("0")), lt), Radius::zero());
  EXPECT_EQ(abs_f(Point(Q("1/9")), P(3, "2", "3", "1")), R(-2));
}

TEST(AbsF, AgreesWithExactEvaluation) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 2000);
  for (const MapParams& mp : {P(3, "9", "3", "1"), P(3, "4", "1", "3"), P(5, "2", "1", "3"), P(2, "8", "2", "1")}) {
    for (int i = 0; i < 200; ++i) {
      const BigRational x = BigRational(BigInt(d(rng) - 1000), BigInt(d(rng))) * pow_p(mp.p, d(rng) % 7 - 3);
      if (x == -mp.c) continue;
      EXPECT_EQ(abs_f(Point(x), mp), Radius::of(point_val(eval_f(Point(x), mp), mp.p))) << x.to_string();
    }
  }
}

TEST(Orbit, SpecExamples) {
  const MapParams lt = P(3, "9", "3", "1");
  const OrbitRecord r = orbit(Point(Q("9")), lt, 3);
  ASSERT_EQ(r.valuations.size(), 4u);
  EXPECT_EQ(r.valuations[0], Valuation::of_int(2));
  EXPECT_EQ(r.valuations[1], Valuation::of_int(6));
  EXPECT_EQ(r.valuations[2], Valuation::of_int(10));
  EXPECT_EQ(r.valuations[3], Valuation::of_int(14));
  EXPECT_EQ(r.termination, OrbitRecord::Termination::Completed);

  const OrbitRecord z = orbit(Point(Q("0")), lt, 10);
  EXPECT_EQ(z.points.size(), 11u);
  for (const auto& v : z.valuations) EXPECT_TRUE(v.is_top());
}

TEST(Orbit, PoleDetected) {
  // f(1) = -12 * 4 / 16 = -3 = -c.
  const OrbitRecord r = orbit(Point(Q("1")), P(5, "-12", "1", "3"), 5);
  EXPECT_EQ(r.termination, OrbitRecord::Termination::PoleHit);
  EXPECT_EQ(r.step, 1);
}

TEST(Orbit, LongOrbitSwitchesToTruncated) {
  const OrbitRecord r = orbit(Point(Q("9")), P(3, "9", "3", "1"), 25);
  ASSERT_TRUE(r.truncated_from.has_value());
  EXPECT_EQ(r.termination, OrbitRecord::Termination::Completed);
  for (std::size_t i = 0; i < r.valuations.size(); ++i) {
    EXPECT_EQ(r.valuations[i], Valuation::of_int(2 + 4 * static_cast<std::int64_t>(i)));
  }
}

TEST(FixedPoints, WorkedExample) {
  const MapParams mp = P(3, "4", "1", "3");
  const auto fps = fixed_points(mp);
  EXPECT_EQ(std::get<BigRational>(fps[0].location), Q("0"));
  EXPECT_EQ(std::get<BigRational>(fps[0].multiplier), Q("4/9"));
  EXPECT_EQ(fps[0].character, Character::Repelling);
  EXPECT_EQ(std::get<BigRational>(fps[1].location), Q("1"));
  EXPECT_EQ(std::get<BigRational>(fps[2].location), Q("-5/3"));
  EXPECT_EQ(std::get<BigRational>(fps[1].multiplier), Q("3/2"));
  EXPECT_EQ(std::get<BigRational>(fps[2].multiplier), Q("17/2"));
  for (const auto& f : fps) {
    EXPECT_TRUE(f.residual_ok);
    EXPECT_TRUE(f.multiplier_matches);
  }
}

TEST(FixedPoints, BranchSwap) {
  const MapParams mp = P(3, "4", "1", "3");
  const auto a = fixed_points(mp);
  const auto b = fixed_points(mp, true);
  EXPECT_TRUE(points_equal(a[1].location, b[2].location));
  EXPECT_TRUE(points_equal(a[2].location, b[1].location));
}

TEST(FixedPoints, AllModes) {
  for (const MapParams& mp : {P(2, "8", "2", "1"), P(3, "2", "1", "3"), P(5, "6", "1", "2"), P(7, "2", "7", "1")}) {
    for (const auto& f : fixed_points(mp)) {
      EXPECT_TRUE(f.residual_ok) << mp.to_string() << " " << to_string(f.which);
      EXPECT_TRUE(f.multiplier_matches) << mp.to_string() << " " << to_string(f.which);
    }
  }
  EXPECT_EQ(domain_name(fixed_points(P(2, "8", "2", "1"))[1].location), domain_name(Point(QuadExt(0, 1, Q("8")))));
  EXPECT_TRUE(is_truncated(fixed_points(P(5, "6", "1", "2"))[1].location));
}

TEST(FixedPoints, ForceTruncated) {
  const MapParams mp = validate_params(3, Q("4"), Q("1"), Q("3"), 40, true);
  const auto fps = fixed_points(mp);
  EXPECT_TRUE(is_truncated(fps[1].location));
  EXPECT_TRUE(fps[1].residual_ok);
  EXPECT_EQ(point_val(fps[2].location, 3), Valuation::of_int(-1));
}

TEST(Derivative, AtZero) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 50; ++i) {
    const BigRational a(d(rng)), b(d(rng)), c(d(rng));
    MapParams mp;
    try {
      mp = validate_params(5, a, b, c);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(std::get<BigRational>(derivative_at(Point(BigRational(0)), mp)), a * b * b / (c * c));
  }
}

TEST(Sampling, RationalSpheres) {
  const MapParams mp = P(3, "4", "1", "3");
  const auto pts = sample_sphere(R(-1), mp, 50, 9);
  ASSERT_EQ(pts.size(), 50u);
  for (const auto& x : pts) EXPECT_EQ(point_val(x, 3), Valuation::of_int(-1));
  EXPECT_EQ(kind_of([&] { sample_sphere(Radius::zero(), mp, 1, 0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { sample_sphere(Radius::from_valuation(HalfInt::from_twice(1)), mp, 1, 0); }),
            ErrorKind::UnsupportedRadius);
}

TEST(Sampling, HalfIntegerSpheres) {
  const MapParams mp = P(2, "2", "2", "1");
  for (const auto& x : sample_sphere(Radius::from_valuation(HalfInt::from_twice(1)), mp, 20, 4)) {
    EXPECT_EQ(point_val(x, 2), Valuation(HalfInt::from_twice(1)));
  }
}

TEST(Sampling, Deterministic) {
  const MapParams mp = P(3, "9", "3", "1");
  const auto a = sample_sphere(R(2), mp, 10, 42);
  const auto b = sample_sphere(R(2), mp, 10, 42);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_string(a[i]), to_string(b[i]));
}
