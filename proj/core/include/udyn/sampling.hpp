#pragma once

#include <cstdint>
#include <vector>

#include "udyn/params.hpp"
#include "udyn/point.hpp"
#include "udyn/radius.hpp"

namespace udyn {

/// Deterministic points on S_radius(0). Integer valuations give rationals
/// ±p^k·m/n with m, n drawn from [1, 10^4] prime to p; half-integer
/// valuations give ±p^k·(m/n)·sqrt(a) and need a ramified sqrt(a).
/// Zero and the pole -c are never returned.
std::vector<Point> sample_sphere(const Radius& radius, const MapParams& params, std::size_t count,
                                 std::uint64_t seed);

}  // namespace udyn
