#include "udyn/limit.hpp"

#include <algorithm>
#include <map>

#include "udyn/error.hpp"

namespace udyn {

Verdict Verdict::eventually_constant_at(Radius r, std::int64_t k) {
  Verdict v = of(Kind::EventuallyConstantAt);
  v.at = r;
  v.index = k;
  return v;
}

Verdict Verdict::cycle_of(std::vector<Radius> orbit_order) {
  Verdict v = of(Kind::Cycle);
  const auto smallest = std::min_element(orbit_order.begin(), orbit_order.end());
  std::rotate(orbit_order.begin(), smallest, orbit_order.end());
  v.cycle = std::move(orbit_order);
  return v;
}

std::string Verdict::kind_name() const {
  switch (kind) {
    case Kind::ToZero: return "ToZero";
    case Kind::ToInfinity: return "ToInfinity";
    case Kind::FixedAt: return "FixedAt";
    case Kind::Cycle: return "Cycle";
    case Kind::EventuallyConstantAt: return "EventuallyConstantAt";
    case Kind::EventuallyConstant: return "EventuallyConstant";
    case Kind::NeedsCriticalValue: return "NeedsCriticalValue";
    case Kind::HorizonExceeded: return "HorizonExceeded";
    case Kind::TwoCycleRegion: return "TwoCycleRegion";
    case Kind::EventuallyInLambda: return "EventuallyInLambda";
  }
  return "?";
}

std::string Verdict::to_string(long p) const {
  switch (kind) {
    case Kind::FixedAt: return "FixedAt(" + at.to_string(p) + ")";
    case Kind::EventuallyConstantAt:
      return "EventuallyConstantAt(" + at.to_string(p) + ", k=" + std::to_string(index) + ")";
    case Kind::Cycle: {
      std::string s = "Cycle[";
      for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? ", " : "") + cycle[i].to_string(p);
      return s + "]";
    }
    case Kind::NeedsCriticalValue: return "NeedsCriticalValue(" + std::string(udyn::to_string(sphere)) + ")";
    default: return kind_name();
  }
}

namespace {

bool escape_certificate(const Radius& cur, const RadiusMapSpec& spec, Verdict& out) {
  if (!cur.is_finite()) return false;
  const Branch br = branch_of(cur, spec);
  if (br.kind != Branch::Kind::Affine || br.slope != 1) return false;
  if (br.intercept > HalfInt() && !br.upper) {
    out = Verdict::to_zero();
    return true;
  }
  if (br.intercept < HalfInt() && !br.lower) {
    out = Verdict::to_infinity();
    return true;
  }
  return false;
}

Verdict periodic_verdict(const Radius& entry, std::int64_t first, std::int64_t period, const RadiusMapSpec& spec) {
  if (period == 1) return first == 0 ? Verdict::fixed_at(entry) : Verdict::eventually_constant_at(entry, first);
  std::vector<Radius> cyc{entry};
  Radius cur = entry;
  for (std::int64_t i = 1; i < period; ++i) {
    cur = radius_step(cur, spec);
    cyc.push_back(cur);
  }
  return Verdict::cycle_of(std::move(cyc));
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

}  // namespace

RadiusOrbitResult radius_orbit(const Radius& r, const RadiusMapSpec& spec, std::int64_t max_iter) {
  if (max_iter <= 0) throw Error(ErrorKind::InvalidArgument, "max_iter must be positive");
  if (r.is_inf()) throw Error(ErrorKind::InvalidArgument, "orbit of inf");
  RadiusOrbitResult res;
  res.trajectory.push_back(r);
  std::map<Radius, std::int64_t> seen{{r, 0}};
  for (std::int64_t i = 0; i < max_iter; ++i) {
    const Radius cur = res.trajectory.back();
    if (cur.is_zero()) {
      res.verdict = Verdict::to_zero();
      return res;
    }
    if (escape_certificate(cur, spec, res.verdict)) return res;
    Radius next;
    try {
      next = radius_step(cur, spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NeedsCriticalValue) throw;
      res.verdict = Verdict::needs(branch_of(cur, spec).sphere);
      return res;
    }
    if (const auto it = seen.find(next); it != seen.end()) {
      const auto len = static_cast<std::int64_t>(res.trajectory.size());
      const std::int64_t period = len - it->second;
      if (period == 1) {
        res.verdict = it->second == 0 ? Verdict::fixed_at(next) : Verdict::eventually_constant_at(next, it->second);
      } else {
        res.verdict = Verdict::cycle_of(std::vector<Radius>(res.trajectory.begin() + it->second, res.trajectory.end()));
      }
      return res;
    }
    seen.emplace(next, static_cast<std::int64_t>(res.trajectory.size()));
    res.trajectory.push_back(next);
  }
  const Radius last = res.trajectory.back();
  if (last.is_zero()) {
    res.verdict = Verdict::to_zero();
  } else if (!escape_certificate(last, spec, res.verdict)) {
    res.verdict = Verdict::horizon_exceeded();
  }
  return res;
}

Verdict closed_form_limit(const Radius& r, const RadiusMapSpec& spec) {
  if (r.is_inf()) throw Error(ErrorKind::InvalidArgument, "limit of inf");
  std::map<Radius, std::int64_t> seen;
  Radius cur = r;
  std::int64_t steps = 0;
  constexpr int kMaxTransitions = 1 << 16;
  for (int guard = 0; guard < kMaxTransitions; ++guard) {
    if (cur.is_zero()) return Verdict::to_zero();
    if (const auto it = seen.find(cur); it != seen.end()) {
      return periodic_verdict(cur, it->second, steps - it->second, spec);
    }
    seen.emplace(cur, steps);
    const Branch br = branch_of(cur, spec);
    if (br.kind == Branch::Kind::Critical) {
      const auto cv = spec.critical_value(br.sphere);
      if (!cv) return Verdict::needs(br.sphere);
      cur = *cv;
      ++steps;
      continue;
    }
    if (br.slope != 1 || br.intercept == HalfInt()) {
      cur = radius_step(cur, spec);
      ++steps;
      continue;
    }
    // slope-1 piece: translate by the intercept until the piece is left
    const std::int64_t v = cur.valuation().twice();
    const std::int64_t t = br.intercept.twice();
    std::int64_t n = 0;
    if (t > 0) {
      if (!br.upper) return Verdict::to_zero();
      n = ceil_div(br.upper->twice() - v, t);
    } else {
      if (!br.lower) return Verdict::to_infinity();
      n = ceil_div(v - br.lower->twice(), -t);
    }
    cur = Radius::from_valuation(HalfInt::from_twice(v + n * t));
    steps += n;
  }
  return Verdict::horizon_exceeded();
}

namespace {

/// Verdict for an orbit that lands on the k = 0 element after k steps and is
/// then sent to the critical value cv, as stated by the lemmas.
Verdict through_critical(const ExceptionalSet& set, std::int64_t k, const Radius& cv, Verdict otherwise,
                         std::string& item, const std::string& in_item, const std::string& out_item) {
  if (cv.is_zero()) {
    item = out_item;
    return Verdict::to_zero();
  }
  const auto j = member_exceptional(cv, set);
  if (!j) {
    item = out_item;
    return otherwise;
  }
  item = in_item;
  const Radius e0 = set.element(0);
  if (*j == 0) return k == 0 ? Verdict::fixed_at(e0) : Verdict::eventually_constant_at(e0, k);
  std::vector<Radius> cyc{e0};
  for (std::int64_t i = *j; i >= 1; --i) cyc.push_back(set.element(i));
  return Verdict::cycle_of(std::move(cyc));
}

/// Shared shape of the B/H/L sub-tables: r outside the set gives `outside`;
/// inside, the critical value decides between a cycle and `outside`.
Verdict set_table(const Radius& r, const RadiusMapSpec& spec, ExceptionalSet::Kind kind, Sphere sphere,
                  Verdict outside, std::string& item, const std::string& prefix, const char* not_in,
                  const char* in_cycle, const char* in_out) {
  const ExceptionalSet set = ExceptionalSet::of(kind, spec);
  const auto k = member_exceptional(r, set);
  if (!k) {
    item = prefix + not_in;
    return outside;
  }
  const auto cv = spec.critical_value(sphere);
  if (!cv) {
    item = prefix + in_cycle + "/" + in_out;
    return Verdict::needs(sphere);
  }
  return through_critical(set, *k, *cv, outside, item, prefix + in_cycle, prefix + in_out);
}

/// "the limit is the critical value" entries (L2.3 at |c|, L2.4.2 at |b|, L3.C at |b|).
Verdict limit_is_critical(const Radius& sphere_radius, Sphere sphere, const RadiusMapSpec& spec) {
  const auto cv = spec.critical_value(sphere);
  if (!cv) return Verdict::needs(sphere);
  if (cv->is_zero()) return Verdict::to_zero();
  if (*cv == sphere_radius) return Verdict::fixed_at(sphere_radius);
  return Verdict::eventually_constant_at(*cv, 1);
}

}  // namespace

Verdict lemma_claim(const Radius& r, const RadiusMapSpec& s, std::string& item) {
  if (r.is_inf()) throw Error(ErrorKind::InvalidArgument, "limit of inf");
  if (r.is_zero()) {
    item = "zero";
    return Verdict::to_zero();
  }
  const HalfInt zero;
  const HalfInt va = s.val_a;
  const HalfInt d = s.ab2_minus_c2();
  using K = ExceptionalSet::Kind;
  switch (s.regime) {
    case Regime::LT:
      if (va > zero) return set_table(r, s, K::B, Sphere::C, Verdict::to_zero(), item, "L2.2.", "1", "2", "3");
      if (va == zero) {
        if (r < s.abs_c()) { item = "L2.3(r<|c|)"; return Verdict::to_zero(); }
        if (r > s.abs_c()) { item = "L2.3(r>|c|)"; return Verdict::fixed_at(r); }
        item = "L2.3(r=|c|)";
        return limit_is_critical(s.abs_c(), Sphere::C, s);
      }
      if (d > zero) {
        const Radius t = Radius::from_valuation(s.val_c - va.halved());
        item = "L2.4.1";
        if (r < t) return Verdict::to_zero();
        if (r == t) return Verdict::fixed_at(r);
        return Verdict::to_infinity();
      }
      if (d == zero) {
        item = "L2.4.2";
        if (r < s.abs_b()) return Verdict::fixed_at(r);
        if (r > s.abs_b()) return Verdict::to_infinity();
        return limit_is_critical(s.abs_b(), Sphere::B, s);
      }
      return set_table(r, s, K::L, Sphere::B, Verdict::to_infinity(), item, "L2.4.", "3", "4", "5");
    case Regime::EQ:
      if (va > zero) return set_table(r, s, K::H, Sphere::B, Verdict::to_zero(), item, "L3.B.", "a", "b", "c");
      if (va == zero) {
        item = "L3.C";
        if (r != s.abs_b()) return Verdict::fixed_at(r);
        return limit_is_critical(s.abs_b(), Sphere::B, s);
      }
      return set_table(r, s, K::H, Sphere::B, Verdict::to_infinity(), item, "L3.D.", "a", "b", "c");
    case Regime::GT:
      if (va > zero && d > zero) {
        return set_table(r, s, K::B, Sphere::C, Verdict::to_zero(), item, "L4.II.", "i", "ii", "iii");
      }
      if (va > zero && d == zero) {
        return set_table(r, s, K::B, Sphere::C, Verdict::eventually_constant(), item, "L4.III.", "i", "ii", "iii");
      }
      if (va > zero) {
        item = "L4.IV";
        if (lambda_interval(s).contains(r)) return Verdict::of(Verdict::Kind::TwoCycleRegion);
        return Verdict::of(Verdict::Kind::EventuallyInLambda);
      }
      if (va == zero) {
        return set_table(r, s, K::L, Sphere::B, Verdict::eventually_constant(), item, "L4.V.", "i", "ii", "iii");
      }
      return set_table(r, s, K::L, Sphere::B, Verdict::to_infinity(), item, "L4.VI.", "i", "ii", "iii");
  }
  return Verdict::horizon_exceeded();
}

namespace {

bool in_lambda(const Radius& x, const RadiusMapSpec& spec) {
  return has_lambda_interval(spec) && lambda_interval(spec).contains(x);
}

}  // namespace

bool claim_admits(const Verdict& claim, const Verdict& exact, const Radius& r, const RadiusMapSpec& spec) {
  using K = Verdict::Kind;
  if (claim == exact) return true;
  switch (claim.kind) {
    case K::EventuallyConstant:
      if (exact.kind == K::ToZero) {
        // landing exactly on 0 is eventually constant; converging to it is not
        const auto orb = radius_orbit(r, spec, 256);
        return std::find(orb.trajectory.begin(), orb.trajectory.end(), Radius::zero()) != orb.trajectory.end();
      }
      return exact.kind == K::FixedAt || exact.kind == K::EventuallyConstantAt;
    case K::TwoCycleRegion:
      return (exact.kind == K::FixedAt && exact.at == r) ||
             (exact.kind == K::Cycle && exact.cycle.size() == 2 &&
              std::find(exact.cycle.begin(), exact.cycle.end(), r) != exact.cycle.end());
    case K::EventuallyInLambda:
      if (exact.kind == K::FixedAt || exact.kind == K::EventuallyConstantAt) return in_lambda(exact.at, spec);
      if (exact.kind == K::Cycle) {
        return std::any_of(exact.cycle.begin(), exact.cycle.end(), [&](const Radius& x) { return in_lambda(x, spec); });
      }
      return false;
    default:
      return claim == exact;
  }
}

LimitResult limit_classify(const Radius& r, const RadiusMapSpec& spec) {
  LimitResult res;
  res.lemma = lemma_claim(r, spec, res.item);
  res.verdict = closed_form_limit(r, spec);
  if (res.lemma.kind == Verdict::Kind::TwoCycleRegion || res.lemma.kind == Verdict::Kind::EventuallyInLambda) {
    if (claim_admits(res.lemma, res.verdict, r, spec)) res.verdict = res.lemma;
  }
  res.lemma_agrees = claim_admits(res.lemma, res.verdict, r, spec);
  return res;
}

bool orbit_consistent(const Verdict& closed, const RadiusOrbitResult& orbit, const Radius& r,
                      const RadiusMapSpec& spec) {
  using K = Verdict::Kind;
  switch (closed.kind) {
    case K::TwoCycleRegion:
      return claim_admits(closed, orbit.verdict, r, spec);
    case K::EventuallyInLambda:
      return std::any_of(orbit.trajectory.begin() + 1, orbit.trajectory.end(),
                         [&](const Radius& x) { return in_lambda(x, spec); });
    default:
      return closed == orbit.verdict;
  }
}

}  // namespace udyn
