#include "udyn/rational.hpp"

#include <cctype>

#include "udyn/error.hpp"

namespace udyn {

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDivisor, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
  } else {
    const auto d = s.substr(slash + 1);
    if (!parse_integer(s.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den)) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return BigRational(num, den);
}

std::size_t BigRational::bit_size() const {
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string BigRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDivisor, "inverse of zero");
  return BigRational(mpq_class(1) / q_);
}

BigRational BigRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

BigRational pow_p(long p, long e) { return BigRational(p).pow(e); }

}  // namespace udyn
