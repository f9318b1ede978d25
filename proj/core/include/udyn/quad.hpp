#pragma once

#include <string>
#include <string_view>

#include "udyn/error.hpp"
#include "udyn/padic.hpp"
#include "udyn/rational.hpp"
#include "udyn/valuation.hpp"

namespace udyn {

/// u + v*t in F[t]/(t^2 - a). With a a non-square this is the field F(sqrt a).
template <class F>
class Quad {
 public:
  Quad(F u, F v, F a) : u_(std::move(u)), v_(std::move(v)), a_(std::move(a)) {}

  const F& u() const { return u_; }
  const F& v() const { return v_; }
  const F& a() const { return a_; }

  /// Same generator, embedding a base-field element.
  Quad embed(const F& x) const { return Quad(x, zero_like(x), a_); }

  /// u^2 - a v^2.
  F norm() const { return u_ * u_ - a_ * (v_ * v_); }
  Quad conjugate() const { return Quad(u_, -v_, a_); }

  Quad operator-() const { return Quad(-u_, -v_, a_); }
  friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.u_ + y.u_, x.v_ + y.v_, x.a_); }
  friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.u_ - y.u_, x.v_ - y.v_, x.a_); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return Quad(x.u_ * y.u_ + x.a_ * (x.v_ * y.v_), x.u_ * y.v_ + x.v_ * y.u_, x.a_);
  }
  friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }

  /// (u - v t) / N(x); ZeroDivisor when the norm vanishes.
  Quad inverse() const {
    const F n = norm();
    if (is_exact_zero(n)) {
      throw Error(ErrorKind::ZeroDivisor, "norm is zero: generator square is a rational square or value is zero");
    }
    const F ni = n.inverse();
    return Quad(u_ * ni, -(v_ * ni), a_);
  }

 private:
  static F zero_like(const F& x) { return x - x; }
  static bool is_exact_zero(const BigRational& x) { return x.is_zero(); }
  static bool is_exact_zero(const TruncatedPadic& x) { return x.is_exact_zero(); }

  F u_;
  F v_;
  F a_;
};

using QuadExt = Quad<BigRational>;
using QuadPadic = Quad<TruncatedPadic>;

QuadExt quad_mul(const QuadExt& x, const QuadExt& y);
QuadExt quad_inv(const QuadExt& x);
BigRational quad_norm(const QuadExt& x);

/// v_p(N(x))/2. InvalidExtension unless a is a non-square in Q_p.
Valuation quad_val(const QuadExt& x, long p);
/// Same as quad_val without re-deciding the class of a; caller guarantees it.
Valuation quad_val_unchecked(const QuadExt& x, long p);
Valuation quad_val_unchecked(const QuadPadic& x);

/// "u + v*sqrt(a)" with the zero parts omitted.
std::string to_string(const QuadExt& x);
std::string to_string(const QuadPadic& x);
/// Accepts "u", "u+v*sqrt(a)", "u-v*sqrt(a)", "v*sqrt(a)", "sqrt(a)" where the
/// radicand is either the literal "a" or a rational equal to a.
QuadExt parse_quad(std::string_view text, const BigRational& a);

}  // namespace udyn
