#include "udyn/params.hpp"

#include "udyn/error.hpp"

namespace udyn {

HalfInt MapParams::val_a() const { return vp_rat(a, p).value(); }
HalfInt MapParams::val_b() const { return vp_rat(b, p).value(); }
HalfInt MapParams::val_c() const { return vp_rat(c, p).value(); }

Regime MapParams::regime() const {
  const HalfInt vb = val_b();
  const HalfInt vc = val_c();
  return vb > vc ? Regime::LT : (vb == vc ? Regime::EQ : Regime::GT);
}

RadiusMapSpec MapParams::radius_spec(CriticalValues cv) const {
  return RadiusMapSpec::make(p, val_a(), val_b(), val_c(), std::move(cv));
}

bool MapParams::half_integer_radii() const {
  return sqrt_mode.kind == SqrtKind::QpNonSquare && val_a().as_int() % 2 != 0;
}

std::string MapParams::to_string() const {
  return "p=" + std::to_string(p) + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
}

MapParams validate_params(long p, const BigRational& a, const BigRational& b, const BigRational& c,
                          std::int64_t precision, bool force_truncated) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (precision <= 0) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  if (a.is_zero()) throw Error(ErrorKind::DegenerateParams, "factor a vanishes (a = 0)");
  if (a == BigRational(1)) throw Error(ErrorKind::DegenerateParams, "factor a-1 vanishes (a = 1)");
  if (b == c) throw Error(ErrorKind::DegenerateParams, "factor b-c vanishes (b = c)");
  if (a * b * b == c * c) throw Error(ErrorKind::DegenerateParams, "factor ab^2-c^2 vanishes");
  if (c.is_zero()) throw Error(ErrorKind::DegenerateParams, "c = 0 puts the pole on the fixed point 0 (unsupported)");
  if (b.is_zero()) throw Error(ErrorKind::DegenerateParams, "b = 0 leaves |b|_p undefined as a radius (unsupported)");
  MapParams mp;
  mp.p = p;
  mp.a = a;
  mp.b = b;
  mp.c = c;
  mp.sqrt_mode = sqrt_class(a, p);
  mp.precision = precision;
  mp.force_truncated = force_truncated;
  return mp;
}

}  // namespace udyn
