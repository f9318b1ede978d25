#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udyn/exceptional.hpp"
#include "udyn/map.hpp"
#include "udyn/params.hpp"
#include "udyn/radius.hpp"
#include "udyn/radius_map.hpp"

namespace udyn {

enum class Theorem { T1, T2, T3 };
std::string_view to_string(Theorem t);

/// A set of radii a claim quantifies over.
struct Region {
  enum class Kind {
    Sphere,        // r = rho
    Below,         // 0 <= r < rho (the ball U_rho(0))
    SpheresBelow,  // 0 < r < rho
    AtMost,        // r <= rho (V_rho(0))
    Above,         // r > rho (complement of V_rho(0))
    AllExcept,     // r != rho, r > 0
    InSet,         // r in an exceptional set
    NotInSet,      // r > 0 and r not in an exceptional set
    InLambda,
    OutsideLambda,  // r not in Λ and r > 0
  };
  Kind kind = Kind::Sphere;
  Radius rho = Radius::zero();
  std::optional<ExceptionalSet> set;
  std::optional<LambdaInterval> lambda;

  bool contains(const Radius& r) const;
  std::string describe(long p) const;
  std::string_view kind_name() const;
};

/// What a claim asserts for x with |x| in the region.
enum class Effect {
  Invariant,           // f(S_r) ⊂ S_r
  SiegelDisk,          // every sphere of the ball is invariant
  ToZero,              // f^n(x) -> 0
  ToInfinity,          // |f^n(x)| -> ∞
  EventuallyConstant,  // |f^n(x)| is constant from some k on
  ReachesCritical,     // f^k(x) on the critical sphere, k the set index of r
  ReturnsToCritical,   // critical value at index k in the set: f^(k+1)(x) back on the sphere
  TwoCycle,            // f^2(S_r) ⊂ S_r
  EntersLambda,        // ψ^k(r) ∈ Λ for some k >= 1 and f^k(x) follows it
  Dichotomy,           // leaves S_{|b|} for good at some step, or never leaves
};
std::string_view to_string(Effect e);

/// "the critical value of f^k(x) lies (not) in the set", k = first visit to the sphere.
struct Condition {
  Sphere sphere = Sphere::B;
  ExceptionalSet set;
  bool member = false;

  std::string describe() const;
};

struct RegionClaim {
  std::string tag;
  Region region;
  Effect effect = Effect::Invariant;
  Sphere sphere = Sphere::B;  // ReachesCritical, ReturnsToCritical, Dichotomy
  std::optional<Condition> condition;

  std::string statement(long p) const;
};

/// Location and character statements for x1 or x2, with the checks the
/// classifier can settle by exact computation.
struct FixedPointReport {
  FixedPointId which = FixedPointId::X1;
  std::optional<FixedPointInfo> info;  // empty when the root could not be computed
  std::string error;                   // reason info is empty

  std::string location_tag;
  std::optional<Region> location;
  std::optional<bool> location_agrees;

  std::string character_tag;
  std::vector<Character> admissible;  // empty: the theorem makes no character claim
  std::optional<bool> character_agrees;

  /// Radius of the ball U(x_i) on which |f(x) - x_i| > |x - x_i| is claimed.
  std::optional<Radius> expansion_ball;
  std::string caveat;
};

/// Distance between x1 and x2: the stated value next to the exact recomputation.
struct DistanceClaim {
  std::string tag;
  Radius stated = Radius::zero();
  Radius recomputed = Radius::zero();              // |2|·sqrt|a|·|c-b|/|a-1|
  std::optional<Radius> observed;                  // val(x1 - x2) from the computed roots
  bool agrees() const { return stated == recomputed; }
};

struct PhasePortrait {
  Theorem theorem = Theorem::T1;
  std::string leaf;  // e.g. "T1.2"
  MapParams params;
  RadiusMapSpec spec;

  std::vector<RegionClaim> invariant_spheres;
  std::vector<RegionClaim> basin_of_zero;
  std::optional<RegionClaim> siegel_disk_zero;
  std::vector<RegionClaim> escape_claims;
  std::vector<RegionClaim> orbit_claims;
  std::vector<FixedPointReport> fixed_point_reports;
  std::optional<DistanceClaim> distance;
  std::optional<ExceptionalSet> exceptional_set;
  std::vector<std::string> flags;

  /// Every region claim, in rendering order.
  std::vector<RegionClaim> region_claims() const;
};

PhasePortrait classify(const MapParams& params);

struct CharacterCheck {
  Character computed = Character::Attracting;
  std::vector<Character> admissible;
  std::string tag;
  /// Empty when the theorem claims nothing about this fixed point.
  std::optional<bool> agrees;
};

/// Character from |f'(x_i)| against the character the applicable theorem claims.
CharacterCheck character_from_multiplier(const MapParams& params, FixedPointId which);

/// Characters the theorem admits for x1/x2 and the item stating it.
std::vector<Character> claimed_characters(const MapParams& params, std::string& tag);

}  // namespace udyn
