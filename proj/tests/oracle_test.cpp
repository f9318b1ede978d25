#include <gtest/gtest.h>

#include <algorithm>

#include "udyn/error.hpp"
#include "udyn/oracle.hpp"
#include "udyn/serialize.hpp"

using namespace udyn;

namespace {

MapParams P(long p, const char* a, const char* b, const char* c) {
  return validate_params(p, BigRational::parse(a), BigRational::parse(b), BigRational::parse(c));
}

Radius R(std::int64_t val) { return Radius::from_valuation(HalfInt::from_int(val)); }
Point X(const char* s) { return Point(BigRational::parse(s)); }

const CheckEntry* entry(const std::vector<CheckEntry>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(CriticalValue, SpecExamples) {
  const MapParams mp = P(3, "9", "3", "1");
  // |x + b| = |b| and |x + c| = |c|: b* = |a||b|^3/|c|^2.
  EXPECT_EQ(critical_value_at(X("-6"), mp, Sphere::B), R(5));
  EXPECT_EQ(critical_value_at(X("-3"), mp, Sphere::B), Radius::zero());
  try {
    critical_value_at(X("1"), mp, Sphere::B);
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongSphere);
  }
}

TEST(CriticalValue, EqualRegimeRange) {
  const MapParams mp = P(5, "2", "1", "3");
  for (const char* x : {"2", "7", "4/3", "-8"}) {
    const Radius r = critical_value_at(X(x), mp, Sphere::B);
    EXPECT_TRUE(r.is_zero() || r.is_finite());
  }
}

TEST(Probe, CoversCriticalValuations) {
  const RadiusMapSpec spec = P(3, "9", "3", "1").radius_spec();
  const auto probe = probe_radii(spec);
  ASSERT_FALSE(probe.empty());
  EXPECT_TRUE(std::is_sorted(probe.rbegin(), probe.rend()));
  for (const Radius& r : {spec.abs_b(), spec.abs_c()}) {
    EXPECT_NE(std::find(probe.begin(), probe.end(), r), probe.end()) << r.to_string(3);
  }
  for (const auto& r : representable_probe_radii(P(3, "9", "3", "1"))) EXPECT_TRUE(r.valuation().is_integer());
}

TEST(Lemma1, BridgePassesInAllRegimes) {
  for (const MapParams& mp : {P(3, "9", "3", "1"), P(3, "4", "1", "3"), P(5, "2", "1", "3"), P(2, "8", "2", "1")}) {
    const CheckEntry e = check_lemma1(mp, 10, 10, 1);
    EXPECT_EQ(e.status, Status::Pass) << mp.to_string() << ": " << e.detail;
  }
}

TEST(FixedPointChecks, WorkedExample) {
  const MapParams mp = P(3, "4", "1", "3");
  const auto checks = check_fixed_points(mp, classify(mp), 10, 0);
  for (const char* name : {"fixed_points.residual", "fixed_points.multiplier", "fixed_points.branch_swap"}) {
    const CheckEntry* e = entry(checks, name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_EQ(e->status, Status::Pass) << name << ": " << e->detail;
  }
}

TEST(RadiusLemmas, SpecExamples) {
  auto spec = [](long p, int va, int vb, int vc) {
    return RadiusMapSpec::make(p, HalfInt::from_int(va), HalfInt::from_int(vb), HalfInt::from_int(vc));
  };
  // LT with |a| = 1 and r > |c|: fixed.
  EXPECT_EQ(limit_classify(R(-2), spec(3, 0, 1, 0)).verdict, Verdict::fixed_at(R(-2)));
  // EQ with |a| > 1 and r not in H: escape.
  EXPECT_EQ(limit_classify(R(-1), spec(3, -2, 0, 0)).verdict.kind, Verdict::Kind::ToInfinity);
  const auto grid = critical_value_grid(spec(3, 0, 1, 0));
  const auto checks = check_radius_lemmas(grid, probe_radii(grid.front()), 60);
  for (const auto& e : checks) EXPECT_NE(e.status, Status::Fail) << e.name << ": " << e.detail;
}

TEST(Verify, FlagsAreNotFailures) {
  VerifyOptions o;
  o.samples = 8;
  o.horizon = 12;
  const VerificationReport rep = verify(P(3, "9", "3", "1"), o);
  EXPECT_FALSE(rep.has_failure());
  EXPECT_GT(rep.count(Status::Flagged), 0);
  EXPECT_NE(std::find_if(rep.flags.begin(), rep.flags.end(),
                         [](const std::string& f) { return f.rfind("DISCREPANCY T1.2.3", 0) == 0; }),
            rep.flags.end());
}

TEST(Verify, DeterministicBytes) {
  VerifyOptions o;
  o.samples = 6;
  o.horizon = 10;
  o.seed = 99;
  const MapParams mp = P(3, "4", "1", "3");
  EXPECT_EQ(dump(report_json(verify(mp, o))), dump(report_json(verify(mp, o))));
}

TEST(Verify, FailuresCarryCounterexamples) {
  VerifyOptions o;
  o.samples = 10;
  o.horizon = 15;
  const VerificationReport rep = verify(P(3, "9", "1", "27"), o);
  EXPECT_TRUE(rep.has_failure());
  for (const auto& e : rep.checks) {
    if (e.status == Status::Fail) {
      EXPECT_TRUE(e.counterexample.has_value()) << e.name;
    }
  }
}

TEST(Verify, SeedChangesSamples) {
  VerifyOptions a, b;
  a.samples = b.samples = 5;
  a.horizon = b.horizon = 8;
  b.seed = 1;
  const MapParams mp = P(5, "2", "1", "3");
  EXPECT_NE(dump(report_json(verify(mp, a))["verification"]["checks"]),
            dump(report_json(verify(mp, b))["verification"]["checks"]));
}
