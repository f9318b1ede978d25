#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace udyn {

using BigInt = mpz_class;

/// Canonical rational number: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& n) : q_(n) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional sign, decimal digits only).
  static BigRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Total number of bits in numerator and denominator.
  std::size_t bit_size() const;

  std::string to_string() const;

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational inverse() const;
  BigRational pow(long e) const;

 private:
  mpq_class q_;
};

/// p^e as a rational, e may be negative.
BigRational pow_p(long p, long e);

}  // namespace udyn
