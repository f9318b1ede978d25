#include "udyn/radius_map.hpp"

#include <algorithm>
#include <sstream>

#include "udyn/error.hpp"

namespace udyn {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::LT: return "LT";
    case Regime::EQ: return "EQ";
    case Regime::GT: return "GT";
  }
  return "?";
}

std::string_view to_string(Sphere s) { return s == Sphere::B ? "b-sphere" : "c-sphere"; }

RadiusMapSpec RadiusMapSpec::make(long p, HalfInt val_a, HalfInt val_b, HalfInt val_c, CriticalValues cv) {
  RadiusMapSpec s;
  s.p = p;
  s.val_a = val_a;
  s.val_b = val_b;
  s.val_c = val_c;
  s.regime = val_b > val_c ? Regime::LT : (val_b == val_c ? Regime::EQ : Regime::GT);
  s.critical = std::move(cv);
  s.validate();
  return s;
}

std::optional<Radius> RadiusMapSpec::critical_value(Sphere s) const {
  switch (regime) {
    case Regime::LT: return s == Sphere::B ? critical.b_star : critical.c_star;
    case Regime::EQ: return critical.b_hat;
    case Regime::GT: return s == Sphere::B ? critical.b_prime : critical.c_prime;
  }
  return std::nullopt;
}

RadiusMapSpec RadiusMapSpec::with_critical(Sphere s, Radius r) const {
  RadiusMapSpec out = *this;
  switch (regime) {
    case Regime::LT: (s == Sphere::B ? out.critical.b_star : out.critical.c_star) = r; break;
    case Regime::EQ: out.critical.b_hat = r; break;
    case Regime::GT: (s == Sphere::B ? out.critical.b_prime : out.critical.c_prime) = r; break;
  }
  return out;
}

void RadiusMapSpec::validate() const {
  const Regime expect = val_b > val_c ? Regime::LT : (val_b == val_c ? Regime::EQ : Regime::GT);
  if (expect != regime) {
    throw Error(ErrorKind::InvalidArgument, "regime " + std::string(to_string(regime)) + " inconsistent with |b|, |c|");
  }
  auto check = [&](const std::optional<Radius>& v, const char* name, bool allowed) {
    if (!v) return;
    if (!allowed) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(name) + " is not a critical value of the " + std::string(to_string(regime)) + " map");
    }
    if (v->is_inf()) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be finite");
  };
  check(critical.b_star, "b*", regime == Regime::LT);
  check(critical.c_star, "c*", regime == Regime::LT);
  check(critical.b_hat, "b^", regime == Regime::EQ);
  check(critical.b_prime, "b'", regime == Regime::GT);
  check(critical.c_prime, "c'", regime == Regime::GT);
  auto bound = [&](const std::optional<Radius>& v, const char* name, Radius limit, bool upper) {
    if (!v) return;
    if (upper ? (*v > limit) : (*v < limit)) {
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " = " + v->to_string(p) + " must be " +
                                                  (upper ? "<= " : ">= ") + limit.to_string(p));
    }
  };
  bound(critical.b_star, "b*", Radius::from_valuation(val_a + 3 * val_b - 2 * val_c), true);
  bound(critical.c_star, "c*", Radius::from_valuation(val_a + val_c), false);
  bound(critical.b_prime, "b'", Radius::from_valuation(val_a + val_b), true);
  bound(critical.c_prime, "c'", Radius::from_valuation(val_a + 2 * val_b - val_c), false);
}

std::string RadiusMapSpec::describe() const {
  std::ostringstream os;
  os << to_string(regime) << " p=" << p << " |a|=" << abs_a().to_string(p) << " |b|=" << abs_b().to_string(p)
     << " |c|=" << abs_c().to_string(p);
  return os.str();
}

Branch branch_of(const Radius& r, const RadiusMapSpec& s) {
  Branch br;
  if (r.is_zero()) return br;
  if (r.is_inf()) throw Error(ErrorKind::InvalidArgument, "radius map is not defined at inf");
  const HalfInt v = r.valuation();
  br.kind = Branch::Kind::Affine;
  auto critical = [&](Sphere sp) {
    br.kind = Branch::Kind::Critical;
    br.sphere = sp;
    return br;
  };
  switch (s.regime) {
    case Regime::LT:
      if (v == s.val_b) return critical(Sphere::B);
      if (v == s.val_c) return critical(Sphere::C);
      if (v > s.val_b) {
        br.intercept = s.ab2_minus_c2();
        br.lower = s.val_b;
      } else if (v > s.val_c) {
        br.slope = 3;
        br.intercept = s.val_a - 2 * s.val_c;
        br.lower = s.val_c;
        br.upper = s.val_b;
      } else {
        br.intercept = s.val_a;
        br.upper = s.val_c;
      }
      return br;
    case Regime::EQ:
      if (v == s.val_b) return critical(Sphere::B);
      br.intercept = s.val_a;
      if (v > s.val_b) {
        br.lower = s.val_b;
      } else {
        br.upper = s.val_b;
      }
      return br;
    case Regime::GT:
      if (v == s.val_b) return critical(Sphere::B);
      if (v == s.val_c) return critical(Sphere::C);
      if (v > s.val_c) {
        br.intercept = s.ab2_minus_c2();
        br.lower = s.val_c;
      } else if (v > s.val_b) {
        br.slope = -1;
        br.intercept = s.val_a + 2 * s.val_b;
        br.lower = s.val_b;
        br.upper = s.val_c;
      } else {
        br.intercept = s.val_a;
        br.upper = s.val_b;
      }
      return br;
  }
  return br;
}

Radius radius_step(const Radius& r, const RadiusMapSpec& spec) {
  const Branch br = branch_of(r, spec);
  switch (br.kind) {
    case Branch::Kind::Zero: return Radius::zero();
    case Branch::Kind::Critical: {
      const auto cv = spec.critical_value(br.sphere);
      if (!cv) {
        throw Error(ErrorKind::NeedsCriticalValue,
                    std::string(to_string(br.sphere)) + " at radius " + r.to_string(spec.p) + " has no configured image");
      }
      return *cv;
    }
    case Branch::Kind::Affine: break;
  }
  return Radius::from_valuation(br.slope * r.valuation() + br.intercept);
}

bool FixSet::contains(const Radius& r) const {
  if (std::find(points.begin(), points.end(), r) != points.end()) return true;
  for (const auto& ray : rays) {
    if (ray.above ? (r > ray.bound && !r.is_inf()) : (r < ray.bound && !r.is_zero())) return true;
  }
  for (const auto& c : conditional) {
    if (c.member == r && c.holds.value_or(false)) return true;
  }
  return false;
}

FixSet fix_set(const RadiusMapSpec& s) {
  FixSet fs;
  fs.points.push_back(Radius::zero());
  const HalfInt va = s.val_a;
  const HalfInt d = s.ab2_minus_c2();
  const HalfInt zero;
  auto cond = [&](Sphere sp, const char* name) {
    const Radius member = sp == Sphere::B ? s.abs_b() : s.abs_c();
    FixSet::Conditional c{member, std::string(name) + " = " + member.to_string(s.p), std::nullopt};
    if (const auto cv = s.critical_value(sp)) c.holds = (*cv == member);
    fs.conditional.push_back(std::move(c));
  };
  switch (s.regime) {
    case Regime::LT:
      if (va > zero) {
        fs.item = "L2.1(|a|<1)";
        cond(Sphere::C, "c*");
      } else if (va == zero) {
        fs.item = "L2.1(|a|=1)";
        fs.rays.push_back({s.abs_c(), true});
        cond(Sphere::C, "c*");
      } else if (d > zero) {
        fs.item = "L2.1(|a|>1,|ab^2|<|c^2|)";
        fs.points.push_back(Radius::from_valuation(s.val_c - va.halved()));
      } else if (d == zero) {
        fs.item = "L2.1(|ab^2|=|c^2|)";
        fs.rays.push_back({s.abs_b(), false});
        cond(Sphere::B, "b*");
      } else {
        fs.item = "L2.1(|ab^2|>|c^2|)";
        cond(Sphere::B, "b*");
      }
      break;
    case Regime::EQ:
      if (va == zero) {
        fs.item = "L3.A(|a|=1)";
        fs.rays.push_back({s.abs_b(), false});
        fs.rays.push_back({s.abs_b(), true});
      } else {
        fs.item = "L3.A(|a|!=1)";
      }
      cond(Sphere::B, "b^");
      break;
    case Regime::GT:
      if (va > zero && d > zero) {
        fs.item = "L4.I(|a|<1,|ab^2|<|c^2|)";
        cond(Sphere::C, "c'");
      } else if (va > zero && d == zero) {
        fs.item = "L4.I(|a|<1,|ab^2|=|c^2|)";
        fs.rays.push_back({s.abs_c(), false});
        cond(Sphere::C, "c'");
      } else if (va > zero) {
        fs.item = "L4.I(|a|<1,|ab^2|>|c^2|)";
        fs.points.push_back(Radius::from_valuation(s.val_b + va.halved()));
      } else if (va == zero) {
        fs.item = "L4.I(|a|=1)";
        fs.rays.push_back({s.abs_b(), true});
        cond(Sphere::B, "b'");
      } else {
        fs.item = "L4.I(|a|>1)";
        cond(Sphere::B, "b'");
      }
      break;
  }
  return fs;
}

bool has_lambda_interval(const RadiusMapSpec& s) {
  return s.regime == Regime::GT && s.val_a > HalfInt() && s.ab2_minus_c2() < HalfInt();
}

LambdaInterval lambda_interval(const RadiusMapSpec& s) {
  if (!has_lambda_interval(s)) {
    throw Error(ErrorKind::InvalidRegime, "Lambda needs GT regime with |a|<1 and |ab^2|>|c^2|; got " + s.describe());
  }
  LambdaInterval li;
  li.p = s.p;
  li.center = s.val_b + s.val_a.halved();
  li.val_b = s.val_b;
  li.val_c = s.val_c;
  LatticeSum center(s.p);
  center.add(1, li.center);
  const LatticeSum b = LatticeSum::of(s.abs_b(), s.p);
  const LatticeSum c = LatticeSum::of(s.abs_c(), s.p);
  const LatticeSum to_c = center - c;  // |b|sqrt|a| - |c|
  const LatticeSum to_b = b - center;  // |b|(1 - sqrt|a|)
  li.half_width = (to_c - to_b).sign() <= 0 ? to_c : to_b;
  li.lo = center - li.half_width;
  li.hi = center + li.half_width;
  return li;
}

bool LambdaInterval::contains(const Radius& r) const {
  if (!r.is_finite()) return false;
  const LatticeSum x = LatticeSum::of(r, p);
  return (x - lo).sign() > 0 && (hi - x).sign() > 0;
}

std::vector<Radius> LambdaInterval::lattice_points(bool half_integers) const {
  std::vector<Radius> out;
  for (std::int64_t t = val_b.twice() + 1; t < val_c.twice(); ++t) {
    if (!half_integers && t % 2 != 0) continue;
    const Radius r = Radius::from_valuation(HalfInt::from_twice(t));
    if (contains(r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Radius& x, const Radius& y) { return x > y; });
  return out;
}

std::string LambdaInterval::to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }

}  // namespace udyn
