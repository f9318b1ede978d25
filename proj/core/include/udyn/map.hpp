#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udyn/params.hpp"
#include "udyn/point.hpp"
#include "udyn/radius.hpp"

namespace udyn {

/// f(x) = a·x·((x+b)/(x+c))^2 in the domain of x. PoleHit at x = -c.
Point eval_f(const Point& x, const MapParams& params);

/// x + q, with q lifted into the domain of x.
Point add_rational(const Point& x, const BigRational& q, const MapParams& params);

/// |f(x)|_p from valuations alone: |a|·|x|·|x+b|^2/|x+c|^2.
Radius abs_f(const Point& x, const MapParams& params);

/// f'(x) = a(x+b)((x+b)(x+c) + 2x(c-b)) / (x+c)^3.
Point derivative_at(const Point& x, const MapParams& params);

struct OrbitOptions {
  /// Exact points are kept while they stay below this many bits; past it the
  /// orbit continues in truncated p-adic arithmetic.
  std::size_t exact_bit_budget = std::size_t{1} << 17;
  std::int64_t truncated_precision = 256;
};

struct OrbitRecord {
  enum class Termination { Completed, PoleHit, PrecisionExhausted };
  std::vector<Point> points;
  std::vector<Valuation> valuations;
  Termination termination = Termination::Completed;
  /// Completed: number of steps taken. PoleHit: index of the point equal to -c.
  /// PrecisionExhausted: index of the first point whose valuation is unknown.
  std::int64_t step = 0;
  /// Index of the first truncated point, if the orbit left exact arithmetic.
  std::optional<std::int64_t> truncated_from;

  std::string termination_name() const;
};

/// Iterates f n times from x with a pole check at every step.
OrbitRecord orbit(const Point& x, const MapParams& params, std::int64_t n, const OrbitOptions& opts = {});

enum class Character { Attracting, Indifferent, Repelling };
std::string_view to_string(Character c);
/// |λ| < 1, = 1, > 1 (λ = 0 is attracting).
Character character_of(const Valuation& multiplier_val);

enum class FixedPointId { X0, X1, X2 };
std::string_view to_string(FixedPointId w);

struct FixedPointInfo {
  FixedPointId which = FixedPointId::X0;
  Point location;
  Point multiplier;              // derivative_at(location)
  Point closed_form_multiplier;  // the displayed formula for f'(x_i)
  Radius multiplier_abs = Radius::zero();
  Character character = Character::Attracting;
  bool residual_ok = false;         // f(x_i) == x_i
  bool multiplier_matches = false;  // multiplier == closed_form_multiplier
};

/// x0 = 0, x1 = -(b√a - c)/(√a - 1), x2 = -(b√a + c)/(√a + 1) with their
/// multipliers. `negate_root` flips the branch of √a, which swaps x1 and x2.
std::array<FixedPointInfo, 3> fixed_points(const MapParams& params, bool negate_root = false);

}  // namespace udyn
