#include "udyn/quad.hpp"

#include <cctype>

#include "udyn/sqrt_class.hpp"

namespace udyn {

QuadExt quad_mul(const QuadExt& x, const QuadExt& y) {
  if (x.a() != y.a()) throw Error(ErrorKind::InvalidArgument, "mixed quadratic generators");
  return x * y;
}

QuadExt quad_inv(const QuadExt& x) { return x.inverse(); }

BigRational quad_norm(const QuadExt& x) { return x.norm(); }

Valuation quad_val_unchecked(const QuadExt& x, long p) {
  const Valuation vn = vp_rat(x.norm(), p);
  if (vn.is_top()) return vn;
  return Valuation(HalfInt::from_twice(vn.value().twice() / 2));
}

Valuation quad_val_unchecked(const QuadPadic& x) {
  const TruncatedPadic n = x.norm();
  const Valuation vn = n.valuation();
  if (vn.is_top()) return vn;
  return Valuation(HalfInt::from_twice(vn.value().twice() / 2));
}

Valuation quad_val(const QuadExt& x, long p) {
  if (x.v().is_zero()) return vp_rat(x.u(), p);
  if (sqrt_class(x.a(), p).kind != SqrtKind::QpNonSquare) {
    throw Error(ErrorKind::InvalidExtension,
                "generator square " + x.a().to_string() + " is a square in Q_" + std::to_string(p));
  }
  return quad_val_unchecked(x, p);
}

std::string to_string(const QuadExt& x) {
  const std::string rad = "sqrt(" + x.a().to_string() + ")";
  if (x.v().is_zero()) return x.u().to_string();
  std::string vpart;
  const BigRational av = x.v().sign() < 0 ? -x.v() : x.v();
  vpart = av == BigRational(1) ? rad : av.to_string() + "*" + rad;
  if (x.u().is_zero()) return (x.v().sign() < 0 ? "-" : "") + vpart;
  return x.u().to_string() + (x.v().sign() < 0 ? " - " : " + ") + vpart;
}

std::string to_string(const QuadPadic& x) {
  return x.u().to_string() + " + " + x.v().to_string() + "*sqrt(a)";
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

BigRational parse_coeff(const std::string& c) {
  if (c.empty() || c == "+") return BigRational(1);
  if (c == "-") return BigRational(-1);
  return BigRational::parse(c);
}

}  // namespace

QuadExt parse_quad(std::string_view text, const BigRational& a) {
  const std::string s = strip_spaces(text);
  const auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadExt(BigRational::parse(s), BigRational(0), a);
  const auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw Error(ErrorKind::ParseError, "malformed quadratic value '" + std::string(text) + "'");
  }
  const std::string rad = s.substr(pos + 5, close - pos - 5);
  if (rad != "a" && BigRational::parse(rad) != a) {
    throw Error(ErrorKind::ParseError, "radicand " + rad + " does not match a = " + a.to_string());
  }
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // split head into u and the signed coefficient of sqrt(a)
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return QuadExt(BigRational(0), parse_coeff(head), a);
  return QuadExt(BigRational::parse(head.substr(0, split)), parse_coeff(head.substr(split)), a);
}

}  // namespace udyn
