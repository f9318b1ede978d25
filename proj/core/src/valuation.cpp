#include "udyn/valuation.hpp"

#include <limits>

#include "udyn/error.hpp"

namespace udyn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "valuation arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "valuation arithmetic");
  return r;
}

}  // namespace

std::int64_t HalfInt::floor() const {
  return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
}

std::int64_t HalfInt::as_int() const {
  if (!is_integer()) throw Error(ErrorKind::InvalidArgument, "half-integer " + to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  const BigRational q = BigRational::parse(text);
  const BigRational doubled = q * BigRational(2);
  if (!doubled.is_integer() || !doubled.num().fits_slong_p()) {
    throw Error(ErrorKind::ParseError, "not a half-integer: '" + std::string(text) + "'");
  }
  return from_twice(doubled.num().get_si());
}

HalfInt HalfInt::operator-() const { return from_twice(checked_mul(twice_, -1)); }
HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt::from_twice(checked_add(a.twice_, b.twice_)); }
HalfInt operator-(HalfInt a, HalfInt b) { return a + (-b); }
HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt::from_twice(checked_mul(k, a.twice_)); }

HalfInt HalfInt::halved() const {
  if (twice_ % 2 != 0) throw Error(ErrorKind::InvalidArgument, "halving " + to_string() + " leaves the value group");
  return from_twice(twice_ / 2);
}

HalfInt Valuation::value() const {
  if (!v_) throw Error(ErrorKind::InvalidArgument, "valuation of zero has no finite value");
  return *v_;
}

std::string Valuation::to_string() const { return v_ ? v_->to_string() : "TOP"; }

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_top() || b.is_top()) return Valuation::top();
  return Valuation(*a.v_ + *b.v_);
}

std::int64_t remove_p(BigInt& n, long p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero integer");
  const BigInt bp(p);
  return static_cast<std::int64_t>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t()));
}

std::int64_t vp_int(const BigInt& n, long p) {
  BigInt m = n;
  return remove_p(m, p);
}

Valuation vp_rat(const BigRational& q, long p) {
  if (q.is_zero()) return Valuation::top();
  return Valuation::of_int(vp_int(q.num(), p) - vp_int(q.den(), p));
}

bool is_prime(long p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) > 0;
}

}  // namespace udyn
