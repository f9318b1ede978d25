#include "udyn/portrait.hpp"

#include <algorithm>
#include <type_traits>

#include "udyn/error.hpp"

namespace udyn {

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
  }
  return "?";
}

std::string_view to_string(Effect e) {
  switch (e) {
    case Effect::Invariant: return "invariant";
    case Effect::SiegelDisk: return "siegel_disk";
    case Effect::ToZero: return "to_zero";
    case Effect::ToInfinity: return "to_infinity";
    case Effect::EventuallyConstant: return "eventually_constant";
    case Effect::ReachesCritical: return "reaches_critical";
    case Effect::ReturnsToCritical: return "returns_to_critical";
    case Effect::TwoCycle: return "two_cycle";
    case Effect::EntersLambda: return "enters_lambda";
    case Effect::Dichotomy: return "dichotomy";
  }
  return "?";
}

namespace {

std::string set_text(const ExceptionalSet& s) {
  // element k has valuation base - k*step, i.e. radius p^(-base + k*step)
  const HalfInt q0 = -s.base();
  const HalfInt st = s.step();
  std::string out = std::string(s.name()) + " = {" + std::to_string(s.p) + "^(" + q0.to_string();
  if (st.twice() != 0) {
    out += st.twice() > 0 ? " + " : " - ";
    out += (st.twice() > 0 ? st : -st).to_string() + "k";
  }
  return out + ") : k >= 0}";
}

bool is_member(const Radius& r, const ExceptionalSet& s) {
  return r.is_finite() && member_exceptional(r, s).has_value();
}

}  // namespace

bool Region::contains(const Radius& r) const {
  switch (kind) {
    case Kind::Sphere: return r == rho;
    case Kind::Below: return r < rho;
    case Kind::SpheresBelow: return !r.is_zero() && r < rho;
    case Kind::AtMost: return r <= rho;
    case Kind::Above: return r > rho;
    case Kind::AllExcept: return r.is_finite() && r != rho;
    case Kind::InSet: return is_member(r, *set);
    case Kind::NotInSet: return r.is_finite() && !is_member(r, *set);
    case Kind::InLambda: return r.is_finite() && lambda->contains(r);
    case Kind::OutsideLambda: return r.is_finite() && !lambda->contains(r);
  }
  return false;
}

std::string_view Region::kind_name() const {
  switch (kind) {
    case Kind::Sphere: return "sphere";
    case Kind::Below: return "below";
    case Kind::SpheresBelow: return "spheres_below";
    case Kind::AtMost: return "at_most";
    case Kind::Above: return "above";
    case Kind::AllExcept: return "all_except";
    case Kind::InSet: return "in_set";
    case Kind::NotInSet: return "not_in_set";
    case Kind::InLambda: return "in_lambda";
    case Kind::OutsideLambda: return "outside_lambda";
  }
  return "?";
}

std::string Region::describe(long p) const {
  const std::string r = rho.to_string(p);
  switch (kind) {
    case Kind::Sphere: return "r = " + r;
    case Kind::Below: return "r < " + r;
    case Kind::SpheresBelow: return "0 < r < " + r;
    case Kind::AtMost: return "r <= " + r;
    case Kind::Above: return "r > " + r;
    case Kind::AllExcept: return "r != " + r;
    case Kind::InSet: return "r in " + set_text(*set);
    case Kind::NotInSet: return "r not in " + std::string(set->name());
    case Kind::InLambda: return "r in (" + lambda->lo.to_string() + ", " + lambda->hi.to_string() + ")";
    case Kind::OutsideLambda: return "r > 0, r not in (" + lambda->lo.to_string() + ", " + lambda->hi.to_string() + ")";
  }
  return "?";
}

std::string Condition::describe() const {
  const std::string which = sphere == Sphere::B ? "b*" : "c*";
  return which + "(f^k(x)) " + (member ? "in " : "not in ") + std::string(set.name());
}

std::string RegionClaim::statement(long p) const {
  std::string out = region.describe(p);
  if (condition) out += " and " + condition->describe();
  out += ": ";
  const std::string s = sphere == Sphere::B ? "S_|b|" : "S_|c|";
  switch (effect) {
    case Effect::Invariant: return out + "f(S_r(0)) in S_r(0)";
    case Effect::SiegelDisk: return out + "every S_r(0) invariant (Siegel disk of 0)";
    case Effect::ToZero: return out + "f^n(x) -> 0";
    case Effect::ToInfinity: return out + "|f^n(x)| -> inf";
    case Effect::EventuallyConstant: return out + "|f^n(x)| constant for n >= k";
    case Effect::ReachesCritical: return out + "f^k(x) in " + s + "(0) for r = element k";
    case Effect::ReturnsToCritical: return out + "f^(k+1)(x) in " + s + "(0) for critical value = element k";
    case Effect::TwoCycle: return out + "f^2(S_r(0)) in S_r(0)";
    case Effect::EntersLambda: return out + "psi^k(r) in Lambda for some k >= 1";
    case Effect::Dichotomy: return out + "either leaves " + s + "(0) for good at some k or never leaves";
  }
  return out;
}

std::vector<RegionClaim> PhasePortrait::region_claims() const {
  std::vector<RegionClaim> all = invariant_spheres;
  all.insert(all.end(), basin_of_zero.begin(), basin_of_zero.end());
  if (siegel_disk_zero) all.push_back(*siegel_disk_zero);
  all.insert(all.end(), escape_claims.begin(), escape_claims.end());
  all.insert(all.end(), orbit_claims.begin(), orbit_claims.end());
  return all;
}

std::vector<Character> claimed_characters(const MapParams& params, std::string& tag) {
  using C = Character;
  const HalfInt va = params.val_a();
  const HalfInt d = params.radius_spec().ab2_minus_c2();
  const HalfInt zero;
  const bool two = params.p == 2;
  const HalfInt root = params.val_b() + va.halved();  // valuation of |b|·sqrt|a|
  tag.clear();
  switch (params.regime()) {
    case Regime::LT:
      if (va > zero) {
        if (!two) { tag = "T1.2.4"; return {C::Repelling}; }
        tag = "T1.2.5";
        if (va > HalfInt::from_int(2)) return {C::Repelling};
        if (va == HalfInt::from_int(2)) return {C::Attracting};
        return {C::Indifferent};
      }
      if (va == zero) {
        tag = "T1.3";
        return two ? std::vector<C>{C::Indifferent} : std::vector<C>{C::Indifferent, C::Attracting};
      }
      if (d >= zero) {
        tag = d > zero ? "T1.4.1" : "T1.4.2";
        return two ? std::vector<C>{C::Indifferent} : std::vector<C>{C::Indifferent, C::Attracting};
      }
      tag = "T1.4.5";
      if (!two) return {C::Repelling};
      {
        // 2|c| has valuation vc - 1
        const HalfInt twice_c = params.val_c() - HalfInt::from_int(1);
        if (root == twice_c) return {C::Attracting};
        if (root < twice_c) return {C::Repelling};
      }
      return {};
    case Regime::EQ:
      if (va > zero) { tag = "T2.A.e"; return {C::Repelling}; }
      if (va < zero) { tag = "T2.C.e"; return {C::Repelling}; }
      return {};
    case Regime::GT:
      if (va > zero) {
        if (d > zero) {
          tag = "T3.II.e";
          if (!two) return {C::Repelling};
          const HalfInt twice_root = root - HalfInt::from_int(1);
          if (params.val_c() < twice_root) return {C::Repelling};
          if (params.val_c() == twice_root) return {C::Attracting};
          return {};
        }
        if (d == zero) { tag = "T3.III.e"; return {C::Attracting, C::Indifferent}; }
        return {};
      }
      if (va == zero) { tag = "T3.V.e"; return {C::Attracting, C::Indifferent}; }
      tag = "T3.VI.e";
      return {C::Repelling};
  }
  return {};
}

CharacterCheck character_from_multiplier(const MapParams& params, FixedPointId which) {
  if (which == FixedPointId::X0) throw Error(ErrorKind::InvalidArgument, "character claims concern x1 and x2");
  const auto fps = fixed_points(params);
  CharacterCheck out;
  out.computed = fps[static_cast<std::size_t>(which)].character;
  out.admissible = claimed_characters(params, out.tag);
  if (!out.admissible.empty()) {
    out.agrees = std::find(out.admissible.begin(), out.admissible.end(), out.computed) != out.admissible.end();
  }
  return out;
}

namespace {

Region sphere(Radius r) { return Region{Region::Kind::Sphere, r, {}, {}}; }
Region ray(Region::Kind k, Radius r) { return Region{k, r, {}, {}}; }
Region in_set(const ExceptionalSet& s) { return Region{Region::Kind::InSet, Radius::zero(), s, {}}; }
Region not_in_set(const ExceptionalSet& s) { return Region{Region::Kind::NotInSet, Radius::zero(), s, {}}; }

RegionClaim claim(std::string tag, Region region, Effect effect, Sphere s = Sphere::B,
                  std::optional<Condition> cond = std::nullopt) {
  return RegionClaim{std::move(tag), std::move(region), effect, s, std::move(cond)};
}

std::optional<Radius> difference_abs(const Point& x, const Point& y, long p) {
  return std::visit(
      [&](const auto& u) -> std::optional<Radius> {
        using T = std::decay_t<decltype(u)>;
        if (const auto* w = std::get_if<T>(&y)) return Radius::of(point_val(Point(u - *w), p));
        return std::nullopt;
      },
      x);
}

// Per exceptional set: radii outside it versus members, with the critical
// sphere split by its value.
struct SetItems {
  std::string generic, member, not_member, member_return;
};

void exceptional_claims(PhasePortrait& pp, const ExceptionalSet& set, Sphere s, Effect limit,
                        const SetItems& tags) {
  const Radius crit = s == Sphere::B ? pp.spec.abs_b() : pp.spec.abs_c();
  std::vector<RegionClaim>& sink =
      limit == Effect::ToZero ? pp.basin_of_zero
                              : (limit == Effect::ToInfinity ? pp.escape_claims : pp.orbit_claims);
  sink.push_back(claim(tags.generic, not_in_set(set), limit));
  pp.orbit_claims.push_back(claim(tags.member, in_set(set), Effect::ReachesCritical, s));
  sink.push_back(claim(tags.not_member, sphere(crit), limit, s, Condition{s, set, false}));
  pp.orbit_claims.push_back(claim(tags.member_return, sphere(crit), Effect::ReturnsToCritical, s, Condition{s, set, true}));
}

void theorem1(PhasePortrait& pp) {
  const RadiusMapSpec& sp = pp.spec;
  const HalfInt zero;
  const HalfInt va = sp.val_a;
  const HalfInt d = sp.ab2_minus_c2();
  const Radius c_over_root = Radius::from_valuation(sp.val_c - va.halved());

  if (va == zero) pp.invariant_spheres.push_back(claim("T1.1", ray(Region::Kind::Above, sp.abs_c()), Effect::Invariant));
  if (d == zero) pp.invariant_spheres.push_back(claim("T1.1", ray(Region::Kind::SpheresBelow, sp.abs_b()), Effect::Invariant));
  if (d > zero && va < zero) pp.invariant_spheres.push_back(claim("T1.1", sphere(c_over_root), Effect::Invariant));

  if (va > zero) {
    pp.leaf = "T1.2";
    const auto B = ExceptionalSet::of(ExceptionalSet::Kind::B, sp);
    pp.exceptional_set = B;
    pp.basin_of_zero.push_back(claim("T1.2.1", not_in_set(B), Effect::ToZero));
    pp.orbit_claims.push_back(claim("T1.2.2", in_set(B), Effect::ReachesCritical, Sphere::C));
    pp.basin_of_zero.push_back(claim("T1.2.2", in_set(B), Effect::ToZero, Sphere::C, Condition{Sphere::C, B, false}));
  } else if (va == zero) {
    pp.leaf = "T1.3";
    pp.basin_of_zero.push_back(claim("T1.3", ray(Region::Kind::Below, sp.abs_c()), Effect::ToZero));
  } else if (d > zero) {
    pp.leaf = "T1.4.1";
    pp.basin_of_zero.push_back(claim("T1.4.1", ray(Region::Kind::Below, c_over_root), Effect::ToZero));
    pp.escape_claims.push_back(claim("T1.4.1", ray(Region::Kind::Above, c_over_root), Effect::ToInfinity));
  } else if (d == zero) {
    pp.leaf = "T1.4.2";
    pp.siegel_disk_zero = claim("T1.4.2", ray(Region::Kind::Below, sp.abs_b()), Effect::SiegelDisk);
    pp.escape_claims.push_back(claim("T1.4.2", ray(Region::Kind::Above, sp.abs_b()), Effect::ToInfinity));
  } else {
    pp.leaf = "T1.4.3";
    const auto L = ExceptionalSet::of(ExceptionalSet::Kind::L, sp);
    pp.exceptional_set = L;
    pp.escape_claims.push_back(claim("T1.4.3", not_in_set(L), Effect::ToInfinity));
    pp.orbit_claims.push_back(claim("T1.4.4", in_set(L), Effect::ReachesCritical, Sphere::B));
    pp.escape_claims.push_back(claim("T1.4.4", in_set(L), Effect::ToInfinity, Sphere::B, Condition{Sphere::B, L, false}));
  }
}

void theorem2(PhasePortrait& pp) {
  const RadiusMapSpec& sp = pp.spec;
  const HalfInt zero;
  const auto H = ExceptionalSet::of(ExceptionalSet::Kind::H, sp);
  if (sp.val_a > zero) {
    pp.leaf = "T2.A";
    pp.exceptional_set = H;
    exceptional_claims(pp, H, Sphere::B, Effect::ToZero, {"T2.A.a", "T2.A.b", "T2.A.c", "T2.A.d"});
  } else if (sp.val_a == zero) {
    pp.leaf = "T2.B";
    pp.invariant_spheres.push_back(claim("T2.B", ray(Region::Kind::AllExcept, sp.abs_b()), Effect::Invariant));
    pp.orbit_claims.push_back(claim("T2.B", sphere(sp.abs_b()), Effect::Dichotomy, Sphere::B));
  } else {
    pp.leaf = "T2.C";
    pp.exceptional_set = H;
    exceptional_claims(pp, H, Sphere::B, Effect::ToInfinity, {"T2.C.a", "T2.C.b", "T2.C.c", "T2.C.d"});
  }
}

void theorem3(PhasePortrait& pp) {
  const RadiusMapSpec& sp = pp.spec;
  const HalfInt zero;
  const HalfInt va = sp.val_a;
  const HalfInt d = sp.ab2_minus_c2();
  if (va > zero && d == zero) pp.invariant_spheres.push_back(claim("T3.I", ray(Region::Kind::SpheresBelow, sp.abs_c()), Effect::Invariant));
  if (va > zero && d < zero) pp.invariant_spheres.push_back(claim("T3.I", sphere(Radius::from_valuation(sp.val_b + va.halved())), Effect::Invariant));
  if (va == zero) pp.invariant_spheres.push_back(claim("T3.I", ray(Region::Kind::Above, sp.abs_b()), Effect::Invariant));

  const auto B = ExceptionalSet::of(ExceptionalSet::Kind::B, sp);
  const auto L = ExceptionalSet::of(ExceptionalSet::Kind::L, sp);
  if (va > zero) {
    if (d > zero) {
      pp.leaf = "T3.II";
      pp.exceptional_set = B;
      exceptional_claims(pp, B, Sphere::C, Effect::ToZero, {"T3.II.a", "T3.II.b", "T3.II.c", "T3.II.d"});
    } else if (d == zero) {
      pp.leaf = "T3.III";
      pp.exceptional_set = B;
      exceptional_claims(pp, B, Sphere::C, Effect::EventuallyConstant, {"T3.III.a", "T3.III.b", "T3.III.c", "T3.III.d"});
    } else {
      pp.leaf = "T3.IV";
      const LambdaInterval lam = lambda_interval(sp);
      pp.invariant_spheres.push_back(claim("T3.IV", Region{Region::Kind::InLambda, Radius::zero(), {}, lam}, Effect::TwoCycle));
      pp.orbit_claims.push_back(claim("T3.IV", Region{Region::Kind::OutsideLambda, Radius::zero(), {}, lam}, Effect::EntersLambda));
      // psi(r) = |a||b|^2/r is an involution only while both r and psi(r) stay in (|c|, |b|).
      const long p = sp.p;
      const HalfInt v_lo = std::min(sp.val_c, sp.val_a + sp.val_b);
      const HalfInt v_hi = std::max(sp.val_b, sp.val_a + 2 * sp.val_b - sp.val_c);
      const LatticeSum lo = LatticeSum::of(Radius::from_valuation(v_lo), p);
      const LatticeSum hi = LatticeSum::of(Radius::from_valuation(v_hi), p);
      if ((lam.lo - lo).sign() < 0 || (lam.hi - hi).sign() > 0) {
        pp.flags.push_back("DISCREPANCY T3.IV: Lambda = " + lam.to_string() + " is not inside (" + lo.to_string() +
                           ", " + hi.to_string() + "), the range where psi^2(r) = r for every configuration");
      }
    }
  } else if (va == zero) {
    pp.leaf = "T3.V";
    pp.exceptional_set = L;
    exceptional_claims(pp, L, Sphere::B, Effect::EventuallyConstant, {"T3.V.a", "T3.V.b", "T3.V.c", "T3.V.d"});
  } else {
    pp.leaf = "T3.VI";
    pp.exceptional_set = L;
    exceptional_claims(pp, L, Sphere::B, Effect::ToInfinity, {"T3.VI.a", "T3.VI.b", "T3.VI.c", "T3.VI.d"});
  }
}

// Location claim for x1, x2 under the leaf, if the theorem makes one.
std::optional<std::pair<std::string, Region>> location_claim(const PhasePortrait& pp) {
  const RadiusMapSpec& sp = pp.spec;
  const std::string& leaf = pp.leaf;
  if (leaf == "T1.2") return {{"T1.2.3", sphere(sp.abs_c())}};
  if (leaf == "T1.3") return {{"T1.3", ray(Region::Kind::Above, sp.abs_c())}};
  if (leaf == "T1.4.1") return {{"T1.4.1", sphere(Radius::from_valuation(sp.val_c - sp.val_a.halved()))}};
  if (leaf == "T1.4.2") return {{"T1.4.2", ray(Region::Kind::AtMost, sp.abs_b())}};
  if (leaf == "T1.4.3") return {{"T1.4.5", sphere(sp.abs_b())}};
  if (leaf == "T2.A") return {{"T2.A.e", sphere(sp.abs_b())}};
  if (leaf == "T2.C") return {{"T2.C.e", sphere(sp.abs_b())}};
  if (leaf == "T3.II") return {{"T3.II.e", sphere(sp.abs_c())}};
  if (leaf == "T3.III") return {{"T3.III.e", ray(Region::Kind::AtMost, sp.abs_c())}};
  if (leaf == "T3.V") return {{"T3.V.e", ray(Region::Kind::Above, sp.abs_b())}};
  if (leaf == "T3.VI") return {{"T3.VI.e", sphere(sp.abs_b())}};
  return std::nullopt;
}

void fixed_point_claims(PhasePortrait& pp) {
  const MapParams& params = pp.params;
  std::optional<std::array<FixedPointInfo, 3>> fps;
  std::string error;
  try {
    fps = fixed_points(params);
  } catch (const Error& e) {
    error = e.what();
  }
  std::string char_tag;
  const std::vector<Character> admissible = claimed_characters(params, char_tag);
  const auto loc = location_claim(pp);
  const bool two = params.p == 2;

  for (const FixedPointId id : {FixedPointId::X1, FixedPointId::X2}) {
    FixedPointReport rep;
    rep.which = id;
    if (fps) {
      rep.info = (*fps)[static_cast<std::size_t>(id)];
    } else {
      rep.error = error;
    }
    if (loc) {
      rep.location_tag = loc->first;
      rep.location = loc->second;
      if (rep.info) {
        try {
          rep.location_agrees = loc->second.contains(Radius::of(point_val(rep.info->location, params.p)));
        } catch (const Error&) {
        }
      }
    }
    rep.character_tag = char_tag;
    rep.admissible = admissible;
    if (rep.info && !admissible.empty()) {
      rep.character_agrees =
          std::find(admissible.begin(), admissible.end(), rep.info->character) != admissible.end();
    }
    if (char_tag == "T1.2.4") rep.expansion_ball = pp.spec.abs_c();
    if (two && (pp.leaf == "T1.3" || pp.leaf == "T1.4.1" || pp.leaf == "T1.4.2")) {
      rep.caveat = "p = 2: indifferent";
    } else if (two && !char_tag.empty()) {
      rep.caveat = "p = 2 thresholds apply";
    }
    pp.fixed_point_reports.push_back(std::move(rep));
  }

  if (!char_tag.empty() && admissible.empty()) {
    pp.flags.push_back("OPEN " + char_tag + ": p = 2 case outside the stated thresholds; no character claim");
  }
  if (admissible.size() > 1) {
    pp.flags.push_back("ADMISSIBLE " + char_tag + ": attractor or indifferent left unresolved");
  }

  if (pp.leaf == "T1.2") {
    // x1 - x2 = 2·sqrt(a)·(c - b)/(a - 1)
    DistanceClaim dc;
    dc.tag = "T1.2.3";
    const long p = params.p;
    dc.stated = Radius::from_valuation(two ? params.val_c() + HalfInt::from_int(1) : params.val_c());
    const HalfInt v2 = HalfInt::from_int(two ? 1 : 0);
    const HalfInt vcb = vp_rat(params.c - params.b, p).value();
    const HalfInt va1 = vp_rat(params.a - BigRational(1), p).value();
    dc.recomputed = Radius::from_valuation(v2 + params.val_a().halved() + vcb - va1);
    if (fps) {
      try {
        dc.observed = difference_abs((*fps)[1].location, (*fps)[2].location, p);
      } catch (const Error&) {
      }
    }
    if (!dc.agrees()) {
      pp.flags.push_back("DISCREPANCY T1.2.3: stated |x1 - x2| = " + dc.stated.to_string(p) + ", recomputed " +
                         dc.recomputed.to_string(p));
    }
    pp.distance = dc;
  }
}

// Unconditional basin and escape regions must not overlap on any probe radius.
void consistency_flags(PhasePortrait& pp) {
  const HalfInt lo = std::min({pp.spec.val_a, pp.spec.val_b, pp.spec.val_c, HalfInt()}) - HalfInt::from_int(3);
  const HalfInt hi = std::max({pp.spec.val_a, pp.spec.val_b, pp.spec.val_c, HalfInt()}) + HalfInt::from_int(3);
  for (std::int64_t t = lo.twice(); t <= hi.twice(); ++t) {
    const Radius r = Radius::from_valuation(HalfInt::from_twice(t));
    for (const auto& z : pp.basin_of_zero) {
      if (z.condition || !z.region.contains(r)) continue;
      for (const auto& e : pp.escape_claims) {
        if (!e.condition && e.region.contains(r)) {
          pp.flags.push_back("INCONSISTENT " + z.tag + "/" + e.tag + " at r = " + r.to_string(pp.spec.p));
        }
      }
    }
  }
}

}  // namespace

PhasePortrait classify(const MapParams& params) {
  PhasePortrait pp;
  pp.params = params;
  pp.spec = params.radius_spec();
  switch (pp.spec.regime) {
    case Regime::LT: pp.theorem = Theorem::T1; theorem1(pp); break;
    case Regime::EQ: pp.theorem = Theorem::T2; theorem2(pp); break;
    case Regime::GT: pp.theorem = Theorem::T3; theorem3(pp); break;
  }
  fixed_point_claims(pp);
  consistency_flags(pp);
  return pp;
}

}  // namespace udyn
