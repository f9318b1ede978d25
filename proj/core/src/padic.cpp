#include "udyn/padic.hpp"

#include <algorithm>
#include <sstream>

#include "udyn/error.hpp"

namespace udyn {

BigInt pow_int(long p, std::int64_t e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in integer power");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

namespace {

BigInt mod_pow(const BigInt& x, long p, std::int64_t e) {
  BigInt m = pow_int(p, e);
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

TruncatedPadic TruncatedPadic::exact_zero(long p) { return TruncatedPadic(p, Kind::ExactZero); }

TruncatedPadic TruncatedPadic::inexact_zero(long p, std::int64_t abs_precision) {
  TruncatedPadic z(p, Kind::InexactZero);
  z.val_ = abs_precision;
  return z;
}

TruncatedPadic TruncatedPadic::from_unit(long p, std::int64_t valuation, const BigInt& unit,
                                         std::int64_t precision) {
  if (precision <= 0) return inexact_zero(p, valuation);
  BigInt u = mod_pow(unit, p, precision);
  if (u == 0) return inexact_zero(p, valuation + precision);
  BigInt stripped = u;
  const std::int64_t w = remove_p(stripped, p);
  if (w != 0) {
    // unit argument was not a unit: shift and lose the corresponding digits
    return from_unit(p, valuation + w, stripped, precision - w);
  }
  TruncatedPadic x(p, Kind::Nonzero);
  x.val_ = valuation;
  x.rel_ = precision;
  x.unit_ = std::move(u);
  return x;
}

TruncatedPadic TruncatedPadic::from_rational(const BigRational& q, long p, std::int64_t precision) {
  if (precision <= 0) throw Error(ErrorKind::InvalidArgument, "precision must be positive");
  if (q.is_zero()) return exact_zero(p);
  BigInt num = q.num();
  BigInt den = q.den();
  const std::int64_t v = remove_p(num, p) - remove_p(den, p);
  const BigInt m = pow_int(p, precision);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return from_unit(p, v, num * inv, precision);
}

Valuation TruncatedPadic::valuation() const {
  switch (kind_) {
    case Kind::ExactZero: return Valuation::top();
    case Kind::InexactZero:
      throw Error(ErrorKind::PrecisionExhausted,
                  "no trusted nonzero digit (value is O(" + std::to_string(p_) + "^" + std::to_string(val_) + "))");
    case Kind::Nonzero: break;
  }
  return Valuation::of_int(val_);
}

std::optional<std::int64_t> TruncatedPadic::abs_precision() const {
  switch (kind_) {
    case Kind::ExactZero: return std::nullopt;
    case Kind::InexactZero: return val_;
    case Kind::Nonzero: break;
  }
  return val_ + rel_;
}

std::vector<long> TruncatedPadic::digits() const {
  std::vector<long> out;
  BigInt u = unit_;
  for (std::int64_t i = 0; i < rel_; ++i) {
    BigInt d;
    mpz_fdiv_qr_ui(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
    out.push_back(d.get_si());
  }
  return out;
}

std::string TruncatedPadic::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::ExactZero: return "0";
    case Kind::InexactZero: os << "O(" << p_ << "^" << val_ << ")"; return os.str();
    case Kind::Nonzero: break;
  }
  os << p_ << "^" << val_ << "*(" << unit_.get_str() << " + O(" << p_ << "^" << rel_ << "))";
  return os.str();
}

TruncatedPadic TruncatedPadic::operator-() const {
  if (kind_ != Kind::Nonzero) return *this;
  return from_unit(p_, val_, -unit_, rel_);
}

TruncatedPadic operator+(const TruncatedPadic& x, const TruncatedPadic& y) {
  if (x.p_ != y.p_) throw Error(ErrorKind::InvalidArgument, "mixing primes in p-adic arithmetic");
  const long p = x.p_;
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const std::int64_t abs = std::min(*x.abs_precision(), *y.abs_precision());
  std::int64_t m = abs;
  if (x.kind_ == TruncatedPadic::Kind::Nonzero) m = std::min(m, x.val_);
  if (y.kind_ == TruncatedPadic::Kind::Nonzero) m = std::min(m, y.val_);
  if (m >= abs) return TruncatedPadic::inexact_zero(p, abs);
  BigInt sum = 0;
  if (x.kind_ == TruncatedPadic::Kind::Nonzero) sum += x.unit_ * pow_int(p, x.val_ - m);
  if (y.kind_ == TruncatedPadic::Kind::Nonzero) sum += y.unit_ * pow_int(p, y.val_ - m);
  return TruncatedPadic::from_unit(p, m, sum, abs - m);
}

TruncatedPadic operator*(const TruncatedPadic& x, const TruncatedPadic& y) {
  if (x.p_ != y.p_) throw Error(ErrorKind::InvalidArgument, "mixing primes in p-adic arithmetic");
  const long p = x.p_;
  if (x.is_exact_zero() || y.is_exact_zero()) return TruncatedPadic::exact_zero(p);
  if (x.is_inexact_zero() || y.is_inexact_zero()) {
    // O(p^k) times something of valuation v is O(p^(k+v)); val_ holds k for an inexact zero
    return TruncatedPadic::inexact_zero(p, x.val_ + y.val_);
  }
  return TruncatedPadic::from_unit(p, x.val_ + y.val_, x.unit_ * y.unit_, std::min(x.rel_, y.rel_));
}

TruncatedPadic TruncatedPadic::inverse() const {
  if (kind_ == Kind::ExactZero) throw Error(ErrorKind::ZeroDivisor, "inverse of zero");
  if (kind_ == Kind::InexactZero) {
    throw Error(ErrorKind::PrecisionExhausted, "inverse of a value with no trusted nonzero digit");
  }
  const BigInt m = pow_int(p_, rel_);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
  return from_unit(p_, -val_, inv, rel_);
}

bool TruncatedPadic::agrees_with(const BigRational& q) const {
  if (is_exact_zero()) return q.is_zero();
  const std::int64_t abs = *abs_precision();
  if (q.is_zero()) return is_inexact_zero();
  const std::int64_t vq = vp_int(q.num(), p_) - vp_int(q.den(), p_);
  const auto diff = *this - from_rational(q, p_, std::max<std::int64_t>(1, abs - vq + 1));
  return diff.kind_ != Kind::Nonzero;
}

}  // namespace udyn
