#include "udyn/sampling.hpp"

#include <random>

#include "udyn/error.hpp"
#include "udyn/quad.hpp"

namespace udyn {

std::vector<Point> sample_sphere(const Radius& radius, const MapParams& params, std::size_t count,
                                 std::uint64_t seed) {
  if (radius.is_zero()) throw Error(ErrorKind::InvalidArgument, "S_0(0) = {0}; nothing to sample");
  if (radius.is_inf()) throw Error(ErrorKind::InvalidArgument, "cannot sample the sphere at infinity");
  const HalfInt v = radius.valuation();
  const long p = params.p;
  std::int64_t k = 0;
  bool with_root = false;
  if (v.is_integer()) {
    k = v.as_int();
  } else {
    if (!params.half_integer_radii()) {
      throw Error(ErrorKind::UnsupportedRadius,
                  "radius " + radius.to_string(p) + " needs a ramified sqrt(a); a = " + params.a.to_string());
    }
    with_root = true;
    k = (v - HalfInt::from_twice(params.val_a().twice() / 2)).as_int();
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> unit(1, 10000);
  std::bernoulli_distribution negative(0.5);
  const BigRational scale = pow_p(p, k);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    long m = unit(rng);
    long n = unit(rng);
    const bool neg = negative(rng);
    if (m % p == 0 || n % p == 0) continue;
    BigRational u = BigRational(BigInt(neg ? -m : m), BigInt(n)) * scale;
    if (with_root) {
      out.emplace_back(QuadExt(BigRational(0), u, params.a));
      continue;
    }
    if (u == -params.c) continue;
    out.emplace_back(std::move(u));
  }
  return out;
}

}  // namespace udyn
