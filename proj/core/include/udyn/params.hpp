#pragma once

#include <cstdint>
#include <string>

#include "udyn/radius_map.hpp"
#include "udyn/rational.hpp"
#include "udyn/sqrt_class.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

/// Parameters of f(x) = a·x·((x+b)/(x+c))^2 with a(a-1)(b-c)(ab^2-c^2) != 0.
struct MapParams {
  long p = 2;
  BigRational a;
  BigRational b;
  BigRational c;
  SqrtClass sqrt_mode{SqrtKind::QpNonSquare, std::nullopt};
  /// Relative p-adic digits for Hensel roots and truncated arithmetic.
  std::int64_t precision = 64;
  /// Compute x1, x2 in truncated p-adic arithmetic even when exact modes exist.
  bool force_truncated = false;

  HalfInt val_a() const;
  HalfInt val_b() const;
  HalfInt val_c() const;
  Regime regime() const;
  RadiusMapSpec radius_spec(CriticalValues cv = {}) const;
  /// Radii of the value group containing x1, x2 include half-integers.
  bool half_integer_radii() const;
  std::string to_string() const;
};

/// Checks primality of p and the nondegeneracy condition, reporting the
/// vanishing factor as DegenerateParams.
MapParams validate_params(long p, const BigRational& a, const BigRational& b, const BigRational& c,
                          std::int64_t precision = 64, bool force_truncated = false);

}  // namespace udyn
