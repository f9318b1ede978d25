#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "udyn/error.hpp"
#include "udyn/portrait.hpp"

using namespace udyn;

namespace {

MapParams P(long p, const char* a, const char* b, const char* c) {
  return validate_params(p, BigRational::parse(a), BigRational::parse(b), BigRational::parse(c));
}

Radius R(std::int64_t val) { return Radius::from_valuation(HalfInt::from_int(val)); }

bool has_flag(const PhasePortrait& pp, const std::string& prefix) {
  return std::any_of(pp.flags.begin(), pp.flags.end(), [&](const std::string& f) { return f.rfind(prefix, 0) == 0; });
}

const RegionClaim* find_claim(const std::vector<RegionClaim>& claims, const std::string& tag, Effect e) {
  for (const auto& c : claims) {
    if (c.tag == tag && c.effect == e) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Classify, LtSmallA) {
  const PhasePortrait pp = classify(P(3, "9", "3", "1"));
  EXPECT_EQ(pp.theorem, Theorem::T1);
  EXPECT_EQ(pp.leaf, "T1.2");
  ASSERT_TRUE(pp.exceptional_set);
  EXPECT_EQ(pp.exceptional_set->kind, ExceptionalSet::Kind::B);
  const RegionClaim* basin = find_claim(pp.basin_of_zero, "T1.2.1", Effect::ToZero);
  ASSERT_NE(basin, nullptr);
  EXPECT_EQ(basin->region.kind, Region::Kind::NotInSet);
  ASSERT_EQ(pp.fixed_point_reports.size(), 2u);
  for (const auto& r : pp.fixed_point_reports) {
    ASSERT_TRUE(r.location);
    EXPECT_EQ(r.location->kind, Region::Kind::Sphere);
    EXPECT_EQ(r.location->rho, R(0));
    EXPECT_EQ(r.location_agrees, std::optional<bool>(true));
    EXPECT_EQ(r.admissible, std::vector<Character>{Character::Repelling});
    EXPECT_EQ(r.character_agrees, std::optional<bool>(true));
    EXPECT_EQ(r.expansion_ball, std::optional<Radius>(R(0)));
  }
}

TEST(Classify, DistanceDiscrepancy) {
  const PhasePortrait pp = classify(P(3, "9", "3", "1"));
  ASSERT_TRUE(pp.distance);
  EXPECT_EQ(pp.distance->tag, "T1.2.3");
  EXPECT_EQ(pp.distance->stated, R(0));
  EXPECT_EQ(pp.distance->recomputed, R(1));
  EXPECT_EQ(pp.distance->observed, std::optional<Radius>(R(1)));
  EXPECT_FALSE(pp.distance->agrees());
  EXPECT_TRUE(has_flag(pp, "DISCREPANCY T1.2.3"));
}

TEST(Classify, LtUnitA) {
  const PhasePortrait pp = classify(P(3, "2", "3", "1"));
  EXPECT_EQ(pp.leaf, "T1.3");
  const RegionClaim* basin = find_claim(pp.basin_of_zero, "T1.3", Effect::ToZero);
  ASSERT_NE(basin, nullptr);
  EXPECT_EQ(basin->region.kind, Region::Kind::Below);
  EXPECT_EQ(basin->region.rho, R(0));
  EXPECT_FALSE(pp.distance.has_value());
}

TEST(Classify, GtUnitA) {
  const PhasePortrait pp = classify(P(3, "4", "1", "3"));
  EXPECT_EQ(pp.theorem, Theorem::T3);
  EXPECT_EQ(pp.leaf, "T3.V");
  bool above_b = false;
  for (const auto& c : pp.invariant_spheres) {
    if (c.effect == Effect::Invariant && c.region.kind == Region::Kind::Above && c.region.rho == R(0)) above_b = true;
  }
  EXPECT_TRUE(above_b);
}

TEST(Classify, SiegelDisk) {
  // |a| = 9, |b| = 1/3, |c| = 1: |ab^2| = |c^2|.
  const PhasePortrait pp = classify(P(3, "1/9", "3", "2"));
  EXPECT_EQ(pp.leaf, "T1.4.2");
  ASSERT_TRUE(pp.siegel_disk_zero);
  EXPECT_EQ(pp.siegel_disk_zero->region.kind, Region::Kind::Below);
  EXPECT_EQ(pp.siegel_disk_zero->region.rho, R(1));
}

TEST(Classify, LambdaRegime) {
  const PhasePortrait pp = classify(P(3, "9", "1", "9"));
  EXPECT_EQ(pp.leaf, "T3.IV");
  bool two_cycle = false, enters = false;
  for (const auto& c : pp.region_claims()) {
    two_cycle |= c.effect == Effect::TwoCycle && c.region.kind == Region::Kind::InLambda;
    enters |= c.effect == Effect::EntersLambda && c.region.kind == Region::Kind::OutsideLambda;
  }
  EXPECT_TRUE(two_cycle);
  EXPECT_TRUE(enters);
}

TEST(Character, SpecExamples) {
  const CharacterCheck eq = character_from_multiplier(P(3, "9", "1", "2"), FixedPointId::X1);
  EXPECT_EQ(eq.computed, Character::Repelling);
  EXPECT_EQ(eq.agrees, std::optional<bool>(true));

  const CharacterCheck two = character_from_multiplier(P(2, "4", "2", "1"), FixedPointId::X2);
  EXPECT_EQ(two.computed, Character::Attracting);
  EXPECT_EQ(two.agrees, std::optional<bool>(true));

  std::string tag;
  const auto adm = claimed_characters(P(3, "2", "3", "1"), tag);
  EXPECT_EQ(tag, "T1.3");
  EXPECT_EQ(adm.size(), 2u);
  const CharacterCheck t13 = character_from_multiplier(P(3, "2", "3", "1"), FixedPointId::X1);
  EXPECT_NE(t13.computed, Character::Repelling);
  EXPECT_EQ(t13.agrees, std::optional<bool>(true));
}

TEST(Character, PowerOfTwoThresholds) {
  EXPECT_EQ(character_from_multiplier(P(2, "8", "2", "1"), FixedPointId::X1).computed, Character::Repelling);
  EXPECT_EQ(character_from_multiplier(P(2, "4", "2", "1"), FixedPointId::X1).computed, Character::Attracting);
  EXPECT_EQ(character_from_multiplier(P(2, "2", "2", "1"), FixedPointId::X1).computed, Character::Indifferent);
}

TEST(Region, Membership) {
  Region r;
  r.kind = Region::Kind::Below;
  r.rho = R(0);
  EXPECT_TRUE(r.contains(Radius::zero()));
  EXPECT_TRUE(r.contains(R(1)));
  EXPECT_FALSE(r.contains(R(0)));
  r.kind = Region::Kind::SpheresBelow;
  EXPECT_FALSE(r.contains(Radius::zero()));
  r.kind = Region::Kind::AllExcept;
  EXPECT_TRUE(r.contains(R(3)));
  EXPECT_FALSE(r.contains(R(0)));
}

// Any valid parameter set gets one leaf, and no radius is claimed by both
// the basin and an escape claim.
TEST(Classify, TotalAndConsistent) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<int> u(1, 40);
  std::int64_t classified = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 60; ++i) {
      auto draw = [&] {
        BigRational x(u(rng));
        if (u(rng) % 2 == 0) x = -x;
        return x * pow_p(p, e(rng));
      };
      MapParams mp;
      try {
        mp = validate_params(p, draw(), draw(), draw());
      } catch (const Error& err) {
        ASSERT_EQ(err.kind(), ErrorKind::DegenerateParams);
        continue;
      }
      const PhasePortrait pp = classify(mp);
      ++classified;
      EXPECT_FALSE(pp.leaf.empty());
      for (const auto& c : pp.region_claims()) EXPECT_FALSE(c.tag.empty()) << mp.to_string();
      EXPECT_FALSE(has_flag(pp, "INCONSISTENT")) << mp.to_string();
    }
  }
  EXPECT_GT(classified, 150);
}
