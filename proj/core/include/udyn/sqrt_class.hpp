#pragma once

#include <optional>
#include <string_view>

#include "udyn/padic.hpp"
#include "udyn/rational.hpp"

namespace udyn {

enum class SqrtKind { RationalSquare, QpSquareNotRational, QpNonSquare };

std::string_view to_string(SqrtKind kind);

struct SqrtClass {
  SqrtKind kind;
  /// Positive rational root; set only for RationalSquare.
  std::optional<BigRational> root;
};

/// Decides how sqrt(a) lives over Q and over Q_p.
SqrtClass sqrt_class(const BigRational& a, long p);

/// Square root of a in Q_p to `precision` relative digits by Hensel lifting.
///
/// Requires sqrt_class(a, p) == QpSquareNotRational. The branch is the lift of
/// the smaller residue root for odd p, and the root congruent to 1 mod 4 (on
/// the unit part) for p = 2.
TruncatedPadic hensel_sqrt(const BigRational& a, long p, std::int64_t precision);

}  // namespace udyn
