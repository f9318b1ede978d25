#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "udyn/padic.hpp"
#include "udyn/quad.hpp"
#include "udyn/rational.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

struct MapParams;

/// A point of the dynamical system: exact rational, exact element of Q(sqrt a),
/// or a finite-precision lift to Q_p or Q_p(sqrt a).
using Point = std::variant<BigRational, QuadExt, TruncatedPadic, QuadPadic>;

/// Exact p-adic valuation; PrecisionExhausted for truncated values with no trusted digit.
Valuation point_val(const Point& x, long p);
std::string to_string(const Point& x);
std::string domain_name(const Point& x);
bool is_truncated(const Point& x);
/// Storage size in bits (exact domains only; 0 for truncated values).
std::size_t bit_size(const Point& x);

/// Converts an exact point to the truncated domain at `precision` relative digits.
Point to_truncated(const Point& x, long p, std::int64_t precision);

/// Rewrites a parsed quadratic value into the domain the parameters call for:
/// rational when the sqrt part vanishes or sqrt(a) is rational, truncated when
/// sqrt(a) only exists in Q_p.
Point normalize_point(const QuadExt& x, const MapParams& params);

/// x - y == 0, decided exactly; PrecisionExhausted when truncation cannot tell.
bool points_equal(const Point& x, const Point& y);

}  // namespace udyn
