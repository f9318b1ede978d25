#include "udyn/sqrt_class.hpp"

#include "udyn/error.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

std::string_view to_string(SqrtKind kind) {
  switch (kind) {
    case SqrtKind::RationalSquare: return "RationalSquare";
    case SqrtKind::QpSquareNotRational: return "QpSquareNotRational";
    case SqrtKind::QpNonSquare: return "QpNonSquare";
  }
  return "Unknown";
}

namespace {

struct UnitSplit {
  std::int64_t val;
  BigInt num;  // p-free
  BigInt den;  // p-free
};

UnitSplit split(const BigRational& a, long p) {
  UnitSplit s{0, a.num(), a.den()};
  s.val = remove_p(s.num, p) - remove_p(s.den, p);
  return s;
}

/// A square root of n modulo odd prime p (Tonelli-Shanks); n must be a nonzero residue.
BigInt sqrt_mod_prime(const BigInt& n, const BigInt& p) {
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  BigInt c;
  BigInt r;
  BigInt t;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  BigInt e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    r = (r * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return r;
}

}  // namespace

SqrtClass sqrt_class(const BigRational& a, long p) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "sqrt_class of zero");
  if (a.sign() > 0 && mpz_perfect_square_p(a.num().get_mpz_t()) && mpz_perfect_square_p(a.den().get_mpz_t())) {
    BigInt rn;
    BigInt rd;
    mpz_sqrt(rn.get_mpz_t(), a.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), a.den().get_mpz_t());
    return {SqrtKind::RationalSquare, BigRational(rn, rd)};
  }
  const UnitSplit s = split(a, p);
  if (s.val % 2 != 0) return {SqrtKind::QpNonSquare, std::nullopt};
  // unit part num/den; num*den has the same square class
  const BigInt prod = s.num * s.den;
  bool square = false;
  if (p == 2) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), prod.get_mpz_t(), 8);
    square = (r == 1);
  } else {
    const BigInt bp(p);
    square = mpz_legendre(prod.get_mpz_t(), bp.get_mpz_t()) == 1;
  }
  return {square ? SqrtKind::QpSquareNotRational : SqrtKind::QpNonSquare, std::nullopt};
}

TruncatedPadic hensel_sqrt(const BigRational& a, long p, std::int64_t precision) {
  if (precision <= 0) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  const SqrtClass cls = sqrt_class(a, p);
  if (cls.kind != SqrtKind::QpSquareNotRational) {
    throw Error(ErrorKind::InvalidArgument,
                "hensel_sqrt needs a Q_p-square that is not a rational square; got " + std::string(to_string(cls.kind)));
  }
  const UnitSplit s = split(a, p);
  const std::int64_t work = precision + 2;
  const BigInt mod = pow_int(p, work);
  BigInt den_inv;
  mpz_invert(den_inv.get_mpz_t(), s.den.get_mpz_t(), mod.get_mpz_t());
  BigInt u;
  const BigInt prod = s.num * den_inv;
  mpz_mod(u.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());

  BigInt x;
  if (p == 2) {
    // x = 1 solves x^2 = u mod 8; each pass fixes one more bit.
    x = 1;
    for (std::int64_t k = 3; k < work; ++k) {
      const BigInt m = pow_int(2, k + 1);
      BigInt diff = x * x - u;
      mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      if (diff != 0) x += pow_int(2, k - 1);
    }
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), 4);
    if (r != 1) x = mod - x;
  } else {
    const BigInt bp(p);
    BigInt u0;
    mpz_mod(u0.get_mpz_t(), u.get_mpz_t(), bp.get_mpz_t());
    BigInt r0 = sqrt_mod_prime(u0, bp);
    if (bp - r0 < r0) r0 = bp - r0;
    x = r0;
    std::int64_t have = 1;
    while (have < work) {
      have = std::min<std::int64_t>(2 * have, work);
      const BigInt m = pow_int(p, have);
      BigInt two_x_inv;
      BigInt two_x = 2 * x;
      mpz_invert(two_x_inv.get_mpz_t(), two_x.get_mpz_t(), m.get_mpz_t());
      BigInt next = x - (x * x - u) * two_x_inv;
      mpz_mod(x.get_mpz_t(), next.get_mpz_t(), m.get_mpz_t());
    }
  }
  return TruncatedPadic::from_unit(p, s.val / 2, x, precision);
}

}  // namespace udyn
