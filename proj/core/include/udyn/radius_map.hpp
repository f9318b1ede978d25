#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udyn/radius.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

/// |b|_p < |c|_p, =, >.
enum class Regime { LT, EQ, GT };
std::string_view to_string(Regime r);

enum class Sphere { B, C };
std::string_view to_string(Sphere s);

/// Image radii of the two critical spheres. Which fields apply depends on
/// the regime: LT uses b_star/c_star, EQ uses b_hat, GT uses b_prime/c_prime.
struct CriticalValues {
  std::optional<Radius> b_star;
  std::optional<Radius> c_star;
  std::optional<Radius> b_hat;
  std::optional<Radius> b_prime;
  std::optional<Radius> c_prime;
};

/// One of the three piecewise radius maps, in valuation coordinates.
struct RadiusMapSpec {
  Regime regime = Regime::LT;
  long p = 2;
  HalfInt val_a;
  HalfInt val_b;
  HalfInt val_c;
  CriticalValues critical;

  /// Builds a spec, deriving the regime from val_b vs val_c.
  static RadiusMapSpec make(long p, HalfInt val_a, HalfInt val_b, HalfInt val_c, CriticalValues cv = {});

  Radius abs_a() const { return Radius::from_valuation(val_a); }
  Radius abs_b() const { return Radius::from_valuation(val_b); }
  Radius abs_c() const { return Radius::from_valuation(val_c); }
  /// v(ab^2) - v(c^2): positive iff |ab^2| < |c^2|.
  HalfInt ab2_minus_c2() const { return val_a + 2 * val_b - 2 * val_c; }

  /// The configured image of a critical sphere, if any.
  std::optional<Radius> critical_value(Sphere s) const;
  /// Copy with the regime-appropriate critical value for sphere s set to r.
  RadiusMapSpec with_critical(Sphere s, Radius r) const;

  /// Checks regime consistency and the admissible ranges of configured
  /// critical values; throws InvalidArgument.
  void validate() const;

  std::string describe() const;
};

/// Which piece of the map applies at a radius.
struct Branch {
  enum class Kind { Zero, Critical, Affine };
  Kind kind = Kind::Zero;
  Sphere sphere = Sphere::B;  // Critical only
  int slope = 1;              // Affine: v -> slope*v + intercept
  HalfInt intercept;
  std::optional<HalfInt> lower;  // exclusive valuation bounds of the piece
  std::optional<HalfInt> upper;
};

Branch branch_of(const Radius& r, const RadiusMapSpec& spec);

/// Image of r. NeedsCriticalValue on an unconfigured critical sphere.
Radius radius_step(const Radius& r, const RadiusMapSpec& spec);

/// Symbolic fixed-point set of a radius map.
struct FixSet {
  struct Ray {
    Radius bound;
    bool above;  // r > bound when true, r < bound otherwise
  };
  struct Conditional {
    Radius member;
    std::string condition;
    std::optional<bool> holds;  // evaluated when the critical value is configured
  };
  std::string item;
  std::vector<Radius> points;  // always contains 0
  std::vector<Ray> rays;
  std::vector<Conditional> conditional;

  bool contains(const Radius& r) const;
};

FixSet fix_set(const RadiusMapSpec& spec);

/// Open interval Λ of the GT regime with |a| < 1 and |ab^2| > |c^2|.
struct LambdaInterval {
  long p = 2;
  HalfInt center;  // valuation of |b|·sqrt|a|
  HalfInt val_b;   // Λ lies strictly inside (|c|, |b|)
  HalfInt val_c;
  LatticeSum lo;
  LatticeSum hi;
  LatticeSum half_width;

  bool contains(const Radius& r) const;
  /// All radii of the given value group (½ℤ if half_integers) inside Λ, largest first.
  std::vector<Radius> lattice_points(bool half_integers) const;
  std::string to_string() const;
};

LambdaInterval lambda_interval(const RadiusMapSpec& spec);
bool has_lambda_interval(const RadiusMapSpec& spec);

}  // namespace udyn
