#include "udyn/radius.hpp"

#include <algorithm>
#include <cctype>

#include "udyn/error.hpp"
#include "udyn/padic.hpp"

namespace udyn {

Radius Radius::of(const Valuation& v) {
  if (v.is_top()) return zero();
  return from_valuation(v.value());
}

HalfInt Radius::valuation() const {
  if (tag_ != Tag::Fin) throw Error(ErrorKind::InvalidArgument, "radius 0 or inf has no finite valuation");
  return v_;
}

Valuation Radius::as_valuation() const {
  if (tag_ == Tag::Zero) return Valuation::top();
  return Valuation(valuation());
}

Radius operator*(const Radius& x, const Radius& y) {
  if (x.is_zero() || y.is_zero()) {
    if (x.is_inf() || y.is_inf()) throw Error(ErrorKind::InvalidArgument, "0 * inf");
    return Radius::zero();
  }
  if (x.is_inf() || y.is_inf()) return Radius::inf();
  return Radius::from_valuation(x.v_ + y.v_);
}

Radius operator/(const Radius& x, const Radius& y) {
  if (y.is_zero()) throw Error(ErrorKind::ZeroDivisor, "radius divided by 0");
  if (y.is_inf()) throw Error(ErrorKind::InvalidArgument, "radius divided by inf");
  if (!x.is_finite()) return x;
  return Radius::from_valuation(x.v_ - y.v_);
}

std::string Radius::to_string(long p) const {
  switch (tag_) {
    case Tag::Zero: return "0";
    case Tag::Inf: return "inf";
    case Tag::Fin: break;
  }
  return std::to_string(p) + "^" + (-v_).to_string();
}

Radius Radius::parse(std::string_view text, long p) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "0") return zero();
  if (s == "inf") return inf();
  const auto caret = s.find('^');
  if (caret != std::string::npos) {
    const BigRational base = BigRational::parse(s.substr(0, caret));
    if (base != BigRational(p)) {
      throw Error(ErrorKind::ParseError, "radius base " + base.to_string() + " is not p = " + std::to_string(p));
    }
    return from_valuation(-HalfInt::parse(s.substr(caret + 1)));
  }
  const BigRational q = BigRational::parse(s);
  if (q.sign() <= 0) throw Error(ErrorKind::ParseError, "radius must be positive: '" + s + "'");
  // The radius p^e belongs to values of valuation -e.
  const std::int64_t e = vp_rat(q, p).value().as_int();
  if (q != pow_p(p, e)) {
    throw Error(ErrorKind::UnsupportedRadius, "'" + s + "' is not a power of " + std::to_string(p));
  }
  return from_valuation(HalfInt::from_int(-e));
}

LatticeSum LatticeSum::of(const Radius& r, long p) {
  LatticeSum s(p);
  if (r.is_inf()) throw Error(ErrorKind::InvalidArgument, "inf is not a lattice sum");
  if (r.is_finite()) s.add(1, r.valuation());
  return s;
}

LatticeSum& LatticeSum::add(std::int64_t coeff, HalfInt valuation) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second == valuation; });
  if (it != terms_.end()) {
    it->first += coeff;
    if (it->first == 0) terms_.erase(it);
  } else if (coeff != 0) {
    terms_.emplace_back(coeff, valuation);
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  }
  return *this;
}

LatticeSum LatticeSum::operator-() const {
  LatticeSum r(p_);
  for (const auto& [c, v] : terms_) r.add(-c, v);
  return r;
}

LatticeSum operator+(LatticeSum x, const LatticeSum& y) {
  for (const auto& [c, v] : y.terms_) x.add(c, v);
  return x;
}

LatticeSum operator*(std::int64_t k, LatticeSum x) {
  LatticeSum r(x.p_);
  for (const auto& [c, v] : x.terms_) r.add(k * c, v);
  return r;
}

int LatticeSum::sign() const {
  if (terms_.empty()) return 0;
  // Multiply through by p^K (K integer) so every term is c·s^e with e >= 0, s = sqrt(p).
  std::int64_t max_twice = terms_.back().second.twice();  // largest valuation = smallest power
  const std::int64_t k = (max_twice >= 0) ? (max_twice + 1) / 2 : 0;
  BigInt a = 0;
  BigInt b = 0;
  for (const auto& [c, v] : terms_) {
    const std::int64_t e = 2 * k - v.twice();  // exponent of s, >= 0
    if (e % 2 == 0) {
      a += BigInt(static_cast<long>(c)) * pow_int(p_, e / 2);
    } else {
      b += BigInt(static_cast<long>(c)) * pow_int(p_, (e - 1) / 2);
    }
  }
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // opposite signs: compare a^2 with p·b^2
  const BigInt lhs = a * a;
  const BigInt rhs = BigInt(p_) * b * b;
  const int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

bool LatticeSum::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

BigRational LatticeSum::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "lattice sum with half-integer exponent is irrational");
  BigRational r(0);
  for (const auto& [c, v] : terms_) r += BigRational(static_cast<long>(c)) * pow_p(p_, -v.as_int());
  return r;
}

std::string LatticeSum::to_string() const {
  if (is_rational()) return to_rational().to_string();
  std::string out;
  for (const auto& [c, v] : terms_) {
    const std::int64_t ac = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (ac != 1) out += std::to_string(ac) + "*";
    out += std::to_string(p_) + "^" + (-v).to_string();
  }
  return out.empty() ? "0" : out;
}

}  // namespace udyn
