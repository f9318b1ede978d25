#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udyn/exceptional.hpp"
#include "udyn/radius.hpp"
#include "udyn/radius_map.hpp"

namespace udyn {

/// Long-run behaviour of a radius under a radius map.
struct Verdict {
  enum class Kind {
    ToZero,
    ToInfinity,
    FixedAt,               // the start radius itself is fixed
    Cycle,                 // eventually periodic with period >= 2
    EventuallyConstantAt,  // reaches the fixed radius `at` first at step `index` >= 1
    EventuallyConstant,    // reaches some fixed radius (value not determined)
    NeedsCriticalValue,
    HorizonExceeded,
    TwoCycleRegion,        // r in Λ: two steps return to r
    EventuallyInLambda,
  };

  Kind kind = Kind::HorizonExceeded;
  Radius at = Radius::zero();
  std::int64_t index = 0;
  std::vector<Radius> cycle;  // rotated to start at its smallest radius
  Sphere sphere = Sphere::B;

  static Verdict of(Kind k) { Verdict v; v.kind = k; return v; }
  static Verdict to_zero() { return of(Kind::ToZero); }
  static Verdict to_infinity() { return of(Kind::ToInfinity); }
  static Verdict fixed_at(Radius r) { Verdict v = of(Kind::FixedAt); v.at = r; return v; }
  static Verdict eventually_constant_at(Radius r, std::int64_t k);
  static Verdict eventually_constant() { return of(Kind::EventuallyConstant); }
  static Verdict cycle_of(std::vector<Radius> orbit_order);
  static Verdict needs(Sphere s) { Verdict v = of(Kind::NeedsCriticalValue); v.sphere = s; return v; }
  static Verdict horizon_exceeded() { return of(Kind::HorizonExceeded); }

  std::string kind_name() const;
  std::string to_string(long p) const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct RadiusOrbitResult {
  std::vector<Radius> trajectory;
  Verdict verdict;
};

/// Iterates the radius map step by step, detecting cycles on exact radii and
/// stopping early on a monotone escape certificate.
RadiusOrbitResult radius_orbit(const Radius& r, const RadiusMapSpec& spec, std::int64_t max_iter);

/// Exact limit obtained by jumping across whole affine pieces at once; the
/// work is bounded by the number of piece transitions, not by a horizon.
Verdict closed_form_limit(const Radius& r, const RadiusMapSpec& spec);

/// The verdict stated by the case table of the matching radius-map lemma,
/// with `item` set to the table entry (e.g. "L2.2.1").
Verdict lemma_claim(const Radius& r, const RadiusMapSpec& spec, std::string& item);

/// True when the (possibly coarser) claimed verdict admits the exact one.
bool claim_admits(const Verdict& claim, const Verdict& exact, const Radius& r, const RadiusMapSpec& spec);

struct LimitResult {
  Verdict verdict;  // exact verdict; Λ-regime verdicts are reported as TwoCycleRegion / EventuallyInLambda
  std::string item;
  Verdict lemma;
  bool lemma_agrees = false;
};

LimitResult limit_classify(const Radius& r, const RadiusMapSpec& spec);

/// Whether a simulated orbit is consistent with a closed-form verdict.
bool orbit_consistent(const Verdict& closed, const RadiusOrbitResult& orbit, const Radius& r,
                      const RadiusMapSpec& spec);

}  // namespace udyn
