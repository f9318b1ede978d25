#include "udyn/point.hpp"

#include <algorithm>

#include "udyn/error.hpp"
#include "udyn/params.hpp"
#include "udyn/sqrt_class.hpp"

namespace udyn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool no_trusted_digit(const TruncatedPadic& x) { return x.is_exact_zero() || x.is_inexact_zero(); }

}  // namespace

Valuation point_val(const Point& x, long p) {
  return std::visit(overloaded{
                        [&](const BigRational& q) { return vp_rat(q, p); },
                        [&](const QuadExt& q) { return quad_val_unchecked(q, p); },
                        [&](const TruncatedPadic& t) { return t.valuation(); },
                        [&](const QuadPadic& q) { return quad_val_unchecked(q); },
                    },
                    x);
}

std::string to_string(const Point& x) {
  return std::visit(overloaded{
                        [](const BigRational& q) { return q.to_string(); },
                        [](const QuadExt& q) { return udyn::to_string(q); },
                        [](const TruncatedPadic& t) { return t.to_string(); },
                        [](const QuadPadic& q) { return udyn::to_string(q); },
                    },
                    x);
}

std::string domain_name(const Point& x) {
  static constexpr const char* kNames[] = {"rational", "quadratic", "truncated-padic", "truncated-quadratic"};
  return kNames[x.index()];
}

bool is_truncated(const Point& x) { return x.index() >= 2; }

std::size_t bit_size(const Point& x) {
  if (const auto* q = std::get_if<BigRational>(&x)) return q->bit_size();
  if (const auto* q = std::get_if<QuadExt>(&x)) return q->u().bit_size() + q->v().bit_size();
  return 0;
}

Point to_truncated(const Point& x, long p, std::int64_t precision) {
  return std::visit(overloaded{
                        [&](const BigRational& q) -> Point { return TruncatedPadic::from_rational(q, p, precision); },
                        [&](const QuadExt& q) -> Point {
                          return QuadPadic(TruncatedPadic::from_rational(q.u(), p, precision),
                                           TruncatedPadic::from_rational(q.v(), p, precision),
                                           TruncatedPadic::from_rational(q.a(), p, precision + 8));
                        },
                        [](const TruncatedPadic& t) -> Point { return t; },
                        [](const QuadPadic& t) -> Point { return t; },
                    },
                    x);
}

Point normalize_point(const QuadExt& x, const MapParams& params) {
  if (x.a() != params.a) throw Error(ErrorKind::InvalidArgument, "point uses a different sqrt than the parameters");
  if (x.v().is_zero()) return x.u();
  switch (params.sqrt_mode.kind) {
    case SqrtKind::RationalSquare: return x.u() + x.v() * *params.sqrt_mode.root;
    case SqrtKind::QpSquareNotRational: {
      const TruncatedPadic root = hensel_sqrt(params.a, params.p, params.precision);
      return TruncatedPadic::from_rational(x.u(), params.p, params.precision + 8) +
             TruncatedPadic::from_rational(x.v(), params.p, params.precision + 8) * root;
    }
    case SqrtKind::QpNonSquare: break;
  }
  return x;
}

bool points_equal(const Point& x, const Point& y) {
  if (x.index() == y.index()) {
    return std::visit(overloaded{
                          [&](const BigRational& q) { return q == std::get<BigRational>(y); },
                          [&](const QuadExt& q) {
                            const auto& r = std::get<QuadExt>(y);
                            return q.u() == r.u() && q.v() == r.v();
                          },
                          [&](const TruncatedPadic& t) { return no_trusted_digit(t - std::get<TruncatedPadic>(y)); },
                          [&](const QuadPadic& q) {
                            const auto& r = std::get<QuadPadic>(y);
                            return no_trusted_digit(q.u() - r.u()) && no_trusted_digit(q.v() - r.v());
                          },
                      },
                      x);
  }
  if (y.index() == 0 && x.index() != 0) return points_equal(y, x);
  if (x.index() != 0) throw Error(ErrorKind::InvalidArgument, "comparing points of incompatible domains");
  const BigRational& q = std::get<BigRational>(x);
  if (const auto* r = std::get_if<QuadExt>(&y)) return r->v().is_zero() && r->u() == q;
  if (const auto* t = std::get_if<TruncatedPadic>(&y)) return t->agrees_with(q);
  const auto& t = std::get<QuadPadic>(y);
  return no_trusted_digit(t.v()) && t.u().agrees_with(q);
}

}  // namespace udyn
