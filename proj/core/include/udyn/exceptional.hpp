#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "udyn/radius.hpp"
#include "udyn/radius_map.hpp"

namespace udyn {

/// Geometric radius sequences whose orbits land on a critical sphere:
///   B = { |a|^-k |c| },  H = { |a^-k b| },  L = { |a^-k b^(1-2k) c^(2k)| },  k >= 0.
struct ExceptionalSet {
  enum class Kind { B, H, L };
  Kind kind = Kind::B;
  long p = 2;
  HalfInt val_a;
  HalfInt val_b;
  HalfInt val_c;

  static ExceptionalSet of(Kind kind, const RadiusMapSpec& spec);

  /// Valuation of the k = 0 element.
  HalfInt base() const;
  /// Valuation decrement per k.
  HalfInt step() const;
  Radius element(std::int64_t k) const;
  std::string_view name() const;
};

/// The k with r = element(k), if any. With step 0 the set is the single radius base.
std::optional<std::int64_t> member_exceptional(const Radius& r, const ExceptionalSet& set);

}  // namespace udyn
