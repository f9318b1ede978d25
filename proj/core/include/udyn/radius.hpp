#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udyn/valuation.hpp"

namespace udyn {

/// A point of {0} ∪ {p^q : q ∈ ½ℤ} ∪ {∞}, stored by valuation (radius p^-v).
class Radius {
 public:
  enum class Tag { Zero, Fin, Inf };

  constexpr Radius() : tag_(Tag::Zero), v_() {}

  static constexpr Radius zero() { return Radius(Tag::Zero, HalfInt()); }
  static constexpr Radius inf() { return Radius(Tag::Inf, HalfInt()); }
  static constexpr Radius from_valuation(HalfInt v) { return Radius(Tag::Fin, v); }
  /// |x|_p for a value of valuation v; TOP maps to zero.
  static Radius of(const Valuation& v);

  constexpr Tag tag() const { return tag_; }
  constexpr bool is_zero() const { return tag_ == Tag::Zero; }
  constexpr bool is_inf() const { return tag_ == Tag::Inf; }
  constexpr bool is_finite() const { return tag_ == Tag::Fin; }
  /// Valuation of a finite radius; throws for 0 and ∞.
  HalfInt valuation() const;
  /// TOP for zero; throws for ∞.
  Valuation as_valuation() const;

  /// Product of radii is the sum of valuations.
  friend Radius operator*(const Radius& x, const Radius& y);
  friend Radius operator/(const Radius& x, const Radius& y);

  /// "0", "inf" or "p^q" with q = -v.
  std::string to_string(long p) const;
  /// Accepts "0", "inf", "p^q" (q integer or k/2) and rationals that are integer powers of p.
  static Radius parse(std::string_view text, long p);

  friend constexpr bool operator==(const Radius&, const Radius&) = default;
  friend constexpr std::strong_ordering operator<=>(const Radius& x, const Radius& y) {
    if (x.tag_ != y.tag_) return static_cast<int>(x.tag_) <=> static_cast<int>(y.tag_);
    if (x.tag_ != Tag::Fin) return std::strong_ordering::equal;
    return y.v_ <=> x.v_;  // larger valuation = smaller radius
  }

 private:
  constexpr Radius(Tag t, HalfInt v) : tag_(t), v_(v) {}
  Tag tag_;
  HalfInt v_;
};

/// Exact real number Σ coeff_i · p^(-v_i) with v_i ∈ ½ℤ; used for radii off the
/// p-power lattice (endpoints of intervals).
class LatticeSum {
 public:
  LatticeSum() = default;
  explicit LatticeSum(long p) : p_(p) {}
  static LatticeSum of(const Radius& r, long p);

  LatticeSum& add(std::int64_t coeff, HalfInt valuation);
  LatticeSum operator-() const;
  friend LatticeSum operator+(LatticeSum x, const LatticeSum& y);
  friend LatticeSum operator-(const LatticeSum& x, const LatticeSum& y) { return x + (-y); }
  friend LatticeSum operator*(std::int64_t k, LatticeSum x);

  /// Exact sign, via A + B·sqrt(p).
  int sign() const;
  /// Exact rational when every exponent is an integer.
  bool is_rational() const;
  BigRational to_rational() const;
  std::string to_string() const;

  const std::vector<std::pair<std::int64_t, HalfInt>>& terms() const { return terms_; }

 private:
  long p_ = 2;
  std::vector<std::pair<std::int64_t, HalfInt>> terms_;  // sorted by valuation, no zero coefficients
};

}  // namespace udyn
