#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udyn/rational.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

/// Finite-precision element of Q_p with capped relative precision.
///
/// A nonzero value is p^leading_valuation * u where the unit u is known
/// modulo p^known_precision. A value whose trusted digits are all zero is
/// an inexact zero O(p^k); asking for its valuation raises
/// PrecisionExhausted. Exact zero is kept separately so that 0 stays 0.
class TruncatedPadic {
 public:
  static TruncatedPadic from_rational(const BigRational& q, long p, std::int64_t precision);
  static TruncatedPadic exact_zero(long p);
  static TruncatedPadic inexact_zero(long p, std::int64_t abs_precision);
  /// p^valuation * unit with unit reduced modulo p^precision.
  static TruncatedPadic from_unit(long p, std::int64_t valuation, const BigInt& unit, std::int64_t precision);

  long prime() const { return p_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_inexact_zero() const { return kind_ == Kind::InexactZero; }
  /// Exact valuation; PrecisionExhausted for an inexact zero, TOP for exact zero.
  Valuation valuation() const;
  std::int64_t leading_valuation() const { return val_; }
  std::int64_t known_precision() const { return rel_; }
  /// Absolute precision val + rel; empty for an exact zero.
  std::optional<std::int64_t> abs_precision() const;
  const BigInt& unit() const { return unit_; }
  /// Trusted base-p digits of the unit part, least significant first.
  std::vector<long> digits() const;

  std::string to_string() const;

  TruncatedPadic operator-() const;
  friend TruncatedPadic operator+(const TruncatedPadic& x, const TruncatedPadic& y);
  friend TruncatedPadic operator-(const TruncatedPadic& x, const TruncatedPadic& y) { return x + (-y); }
  friend TruncatedPadic operator*(const TruncatedPadic& x, const TruncatedPadic& y);
  friend TruncatedPadic operator/(const TruncatedPadic& x, const TruncatedPadic& y) { return x * y.inverse(); }
  TruncatedPadic inverse() const;

  /// True when x and the exact rational q agree on every trusted digit.
  bool agrees_with(const BigRational& q) const;

 private:
  enum class Kind { Nonzero, InexactZero, ExactZero };
  TruncatedPadic(long p, Kind kind) : p_(p), kind_(kind) {}

  long p_ = 2;
  Kind kind_ = Kind::ExactZero;
  std::int64_t val_ = 0;  // leading valuation, or absolute precision for an inexact zero
  std::int64_t rel_ = 0;
  BigInt unit_ = 0;
};

BigInt pow_int(long p, std::int64_t e);

}  // namespace udyn
