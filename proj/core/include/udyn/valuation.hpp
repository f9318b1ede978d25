#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "udyn/rational.hpp"

namespace udyn {

/// An element of ½ℤ, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { HalfInt h; h.twice_ = twice; return h; }
  static constexpr HalfInt from_int(std::int64_t n) { return from_twice(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Floor of the value.
  std::int64_t floor() const;
  /// Exact value; throws InvalidArgument for half-integers.
  std::int64_t as_int() const;

  /// "k" or "k/2".
  std::string to_string() const;
  static HalfInt parse(std::string_view text);

  HalfInt operator-() const;
  friend HalfInt operator+(HalfInt a, HalfInt b);
  friend HalfInt operator-(HalfInt a, HalfInt b);
  friend HalfInt operator*(std::int64_t k, HalfInt a);
  /// Half of the value; throws when the result would leave ½ℤ.
  HalfInt halved() const;

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  std::int64_t twice_ = 0;
};

/// p-adic valuation: a half-integer or TOP (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() = default;  // TOP
  constexpr Valuation(HalfInt v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation top() { return Valuation(); }
  static constexpr Valuation of_int(std::int64_t n) { return Valuation(HalfInt::from_int(n)); }

  constexpr bool is_top() const { return !v_.has_value(); }
  HalfInt value() const;

  std::string to_string() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_top() || b.is_top()) {
      return static_cast<int>(a.is_top()) <=> static_cast<int>(b.is_top());
    }
    return *a.v_ <=> *b.v_;
  }

 private:
  std::optional<HalfInt> v_;
};

/// Exponent of p in n; n must be nonzero.
std::int64_t vp_int(const BigInt& n, long p);
/// v_p(num) - v_p(den), or TOP for zero.
Valuation vp_rat(const BigRational& q, long p);
/// Strips every factor p from n, returning the exponent removed.
std::int64_t remove_p(BigInt& n, long p);

bool is_prime(long p);

}  // namespace udyn
