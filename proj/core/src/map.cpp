#include "udyn/map.hpp"

#include <algorithm>

#include "udyn/error.hpp"
#include "udyn/sqrt_class.hpp"

namespace udyn {

namespace {

TruncatedPadic lift_padic(const BigRational& q, const TruncatedPadic& like, std::int64_t fallback) {
  const long p = like.prime();
  if (q.is_zero()) return TruncatedPadic::exact_zero(p);
  const std::int64_t vq = vp_int(q.num(), p) - vp_int(q.den(), p);
  const auto abs = like.abs_precision();
  std::int64_t rel = fallback;
  if (abs) rel = std::max(like.known_precision(), *abs - vq);
  return TruncatedPadic::from_rational(q, p, std::max<std::int64_t>(rel, 1) + 8);
}

// Per-domain glue: embedding rational constants and deciding zero.
enum class ZeroTest { Zero, Nonzero, Unknown };

struct Glue {
  std::int64_t fallback_precision;

  BigRational lift(const BigRational& q, const BigRational&) const { return q; }
  QuadExt lift(const BigRational& q, const QuadExt& like) const { return like.embed(q); }
  TruncatedPadic lift(const BigRational& q, const TruncatedPadic& like) const {
    return lift_padic(q, like, fallback_precision);
  }
  QuadPadic lift(const BigRational& q, const QuadPadic& like) const {
    const TruncatedPadic& ref = like.u().is_exact_zero() ? like.v() : like.u();
    return QuadPadic(lift_padic(q, ref, fallback_precision), TruncatedPadic::exact_zero(ref.prime()), like.a());
  }

  static ZeroTest zero(const BigRational& x) { return x.is_zero() ? ZeroTest::Zero : ZeroTest::Nonzero; }
  static ZeroTest zero(const QuadExt& x) {
    return x.u().is_zero() && x.v().is_zero() ? ZeroTest::Zero : ZeroTest::Nonzero;
  }
  static ZeroTest zero(const TruncatedPadic& x) {
    if (x.is_exact_zero()) return ZeroTest::Zero;
    return x.is_inexact_zero() ? ZeroTest::Unknown : ZeroTest::Nonzero;
  }
  static ZeroTest zero(const QuadPadic& x) {
    const ZeroTest u = zero(x.u());
    const ZeroTest v = zero(x.v());
    if (u == ZeroTest::Nonzero || v == ZeroTest::Nonzero) return ZeroTest::Nonzero;
    return u == ZeroTest::Zero && v == ZeroTest::Zero ? ZeroTest::Zero : ZeroTest::Unknown;
  }
};

template <class T>
T pole_checked_denominator(const T& x, const MapParams& params, const Glue& g) {
  T den = x + g.lift(params.c, x);
  switch (Glue::zero(den)) {
    case ZeroTest::Zero: throw Error(ErrorKind::PoleHit, "x = -c = " + (-params.c).to_string());
    case ZeroTest::Unknown: throw Error(ErrorKind::PrecisionExhausted, "cannot separate x from the pole -c");
    case ZeroTest::Nonzero: break;
  }
  return den;
}

template <class T>
T eval_impl(const T& x, const MapParams& params, const Glue& g) {
  const T den = pole_checked_denominator(x, params, g);
  const T ratio = (x + g.lift(params.b, x)) / den;
  return g.lift(params.a, x) * x * (ratio * ratio);
}

template <class T>
T derivative_impl(const T& x, const MapParams& params, const Glue& g) {
  const T den = pole_checked_denominator(x, params, g);
  const T xb = x + g.lift(params.b, x);
  const T two = g.lift(BigRational(2), x);
  const T inner = xb * den + two * x * g.lift(params.c - params.b, x);
  return g.lift(params.a, x) * xb * inner / (den * den * den);
}

Glue glue_for(const MapParams& params) { return Glue{params.precision}; }

}  // namespace

Point eval_f(const Point& x, const MapParams& params) {
  const Glue g = glue_for(params);
  return std::visit([&](const auto& v) -> Point { return eval_impl(v, params, g); }, x);
}

Point derivative_at(const Point& x, const MapParams& params) {
  const Glue g = glue_for(params);
  return std::visit([&](const auto& v) -> Point { return derivative_impl(v, params, g); }, x);
}

Point add_rational(const Point& x, const BigRational& q, const MapParams& params) {
  const Glue g = glue_for(params);
  return std::visit([&](const auto& v) -> Point { return v + g.lift(q, v); }, x);
}

Radius abs_f(const Point& x, const MapParams& params) {
  const Glue g = glue_for(params);
  const long p = params.p;
  return std::visit(
      [&](const auto& v) -> Radius {
        const Valuation vx = point_val(Point(v), p);
        const Point xc = Point(pole_checked_denominator(v, params, g));
        if (vx.is_top()) return Radius::zero();
        const Valuation vxb = point_val(Point(v + g.lift(params.b, v)), p);
        if (vxb.is_top()) return Radius::zero();
        const Valuation vxc = point_val(xc, p);
        return Radius::from_valuation(params.val_a() + vx.value() + 2 * vxb.value() - 2 * vxc.value());
      },
      x);
}

std::string OrbitRecord::termination_name() const {
  switch (termination) {
    case Termination::Completed: return "Completed";
    case Termination::PoleHit: return "PoleHit";
    case Termination::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "?";
}

OrbitRecord orbit(const Point& x, const MapParams& params, std::int64_t n, const OrbitOptions& opts) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "orbit length must be positive");
  OrbitRecord rec;
  Point cur = x;
  if (is_truncated(cur)) rec.truncated_from = 0;
  for (std::int64_t i = 0;; ++i) {
    try {
      rec.valuations.push_back(point_val(cur, params.p));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted) throw;
      rec.termination = OrbitRecord::Termination::PrecisionExhausted;
      rec.step = i;
      return rec;
    }
    rec.points.push_back(cur);
    if (i == n) break;
    if (!is_truncated(cur) && bit_size(cur) > opts.exact_bit_budget) {
      cur = to_truncated(cur, params.p, opts.truncated_precision);
      rec.truncated_from = i + 1;
    }
    try {
      cur = eval_f(cur, params);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleHit) {
        rec.termination = OrbitRecord::Termination::PoleHit;
        rec.step = i;
        return rec;
      }
      if (e.kind() == ErrorKind::PrecisionExhausted) {
        rec.termination = OrbitRecord::Termination::PrecisionExhausted;
        rec.step = i;
        return rec;
      }
      throw;
    }
  }
  rec.step = n;
  return rec;
}

std::string_view to_string(Character c) {
  switch (c) {
    case Character::Attracting: return "Attracting";
    case Character::Indifferent: return "Indifferent";
    case Character::Repelling: return "Repelling";
  }
  return "?";
}

Character character_of(const Valuation& v) {
  if (v.is_top() || v.value() > HalfInt()) return Character::Attracting;
  return v.value() == HalfInt() ? Character::Indifferent : Character::Repelling;
}

std::string_view to_string(FixedPointId w) {
  switch (w) {
    case FixedPointId::X0: return "x0";
    case FixedPointId::X1: return "x1";
    case FixedPointId::X2: return "x2";
  }
  return "?";
}

namespace {

FixedPointInfo finish(FixedPointId which, Point location, Point closed, const MapParams& params) {
  FixedPointInfo info;
  info.which = which;
  info.location = std::move(location);
  info.multiplier = derivative_at(info.location, params);
  info.closed_form_multiplier = std::move(closed);
  const Valuation vm = point_val(info.multiplier, params.p);
  info.multiplier_abs = Radius::of(vm);
  info.character = character_of(vm);
  info.residual_ok = points_equal(eval_f(info.location, params), info.location);
  info.multiplier_matches = points_equal(info.multiplier, info.closed_form_multiplier);
  return info;
}

template <class T>
void nonzero_fixed_points(const T& s, const MapParams& params, std::array<FixedPointInfo, 3>& out) {
  const Glue g = glue_for(params);
  const T one = g.lift(BigRational(1), s);
  const T two = g.lift(BigRational(2), s);
  const T b = g.lift(params.b, s);
  const T c = g.lift(params.c, s);
  const T bs = b * s;
  const T x1 = -((bs - c) / (s - one));
  const T x2 = -((bs + c) / (s + one));
  const T cb_s = (c - b) * s;
  const T m1 = one + two * (c - bs) * (s - one) / cb_s;
  const T m2 = one + two * (c + bs) * (s + one) / cb_s;
  out[1] = finish(FixedPointId::X1, Point(x1), Point(m1), params);
  out[2] = finish(FixedPointId::X2, Point(x2), Point(m2), params);
}

}  // namespace

std::array<FixedPointInfo, 3> fixed_points(const MapParams& params, bool negate_root) {
  std::array<FixedPointInfo, 3> out;
  out[0] = finish(FixedPointId::X0, Point(BigRational(0)), Point(params.a * params.b * params.b / (params.c * params.c)),
                  params);
  const long p = params.p;
  const std::int64_t prec = params.precision;
  const int sign = negate_root ? -1 : 1;
  switch (params.sqrt_mode.kind) {
    case SqrtKind::RationalSquare: {
      const BigRational s = BigRational(sign) * *params.sqrt_mode.root;
      if (params.force_truncated) {
        nonzero_fixed_points(TruncatedPadic::from_rational(s, p, prec), params, out);
      } else {
        nonzero_fixed_points(s, params, out);
      }
      break;
    }
    case SqrtKind::QpSquareNotRational: {
      TruncatedPadic s = hensel_sqrt(params.a, p, prec);
      if (negate_root) s = -s;
      nonzero_fixed_points(s, params, out);
      break;
    }
    case SqrtKind::QpNonSquare: {
      const QuadExt t(BigRational(0), BigRational(sign), params.a);
      if (params.force_truncated) {
        nonzero_fixed_points(std::get<QuadPadic>(to_truncated(Point(t), p, prec)), params, out);
      } else {
        nonzero_fixed_points(t, params, out);
      }
      break;
    }
  }
  return out;
}

}  // namespace udyn
