#include "udyn/oracle.hpp"

#include <algorithm>
#include <type_traits>

#include "udyn/error.hpp"
#include "udyn/exceptional.hpp"
#include "udyn/limit.hpp"
#include "udyn/sampling.hpp"

namespace udyn {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Flagged: return "FLAGGED";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool VerificationReport::has_failure() const { return count(Status::Fail) > 0; }

std::int64_t VerificationReport::count(Status s) const {
  return std::count_if(checks.begin(), checks.end(), [&](const CheckEntry& e) { return e.status == s; });
}

Radius critical_value_at(const Point& x, const MapParams& params, Sphere which) {
  const long p = params.p;
  const Radius r = Radius::of(point_val(x, p));
  const HalfInt v_crit = which == Sphere::B ? params.val_b() : params.val_c();
  if (r != Radius::from_valuation(v_crit)) {
    throw Error(ErrorKind::WrongSphere, "|x| = " + r.to_string(p) + " is not the radius of S_|" +
                                            std::string(which == Sphere::B ? "b" : "c") + "|(0)");
  }
  const Valuation vxc = point_val(add_rational(x, params.c, params), p);
  if (vxc.is_top()) throw Error(ErrorKind::PoleHit, "x = -c has no critical value");
  const Valuation vxb = point_val(add_rational(x, params.b, params), p);
  if (vxb.is_top()) return Radius::zero();
  return Radius::from_valuation(params.val_a() + v_crit + 2 * vxb.value() - 2 * vxc.value());
}

std::vector<Radius> probe_radii(const RadiusMapSpec& spec) {
  std::vector<HalfInt> anchors{spec.val_b, spec.val_c};
  if (spec.val_a.is_integer()) {
    anchors.push_back(spec.val_b + spec.val_a.halved());
    anchors.push_back(spec.val_c - spec.val_a.halved());
  }
  const HalfInt lo = *std::min_element(anchors.begin(), anchors.end()) - HalfInt::from_int(3);
  const HalfInt hi = *std::max_element(anchors.begin(), anchors.end()) + HalfInt::from_int(3);
  std::vector<Radius> out;
  for (std::int64_t t = lo.twice(); t <= hi.twice(); ++t) out.push_back(Radius::from_valuation(HalfInt::from_twice(t)));
  return out;
}

std::vector<Radius> representable_probe_radii(const MapParams& params) {
  std::vector<Radius> out;
  const bool half = params.half_integer_radii();
  for (const Radius& r : probe_radii(params.radius_spec())) {
    if (half || r.valuation().is_integer()) out.push_back(r);
  }
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt, std::int64_t i) {
  return splitmix(seed ^ splitmix(fnv1a(salt) + static_cast<std::uint64_t>(i)));
}

// One point per sample index, cycling through the radii.
std::vector<Point> sample_points(const MapParams& params, const std::vector<Radius>& radii, std::int64_t count,
                                 std::uint64_t seed, std::string_view salt) {
  std::vector<Point> out;
  if (radii.empty()) return out;
  for (std::int64_t i = 0; i < count; ++i) {
    const Radius& r = radii[static_cast<std::size_t>(i) % radii.size()];
    out.push_back(sample_sphere(r, params, 1, derive_seed(seed, salt, i)).front());
  }
  return out;
}

enum class Outcome { Pass, Fail, Inconclusive, Vacuous, Skipped };

struct Tally {
  std::int64_t pass = 0, fail = 0, inconclusive = 0, vacuous = 0, skipped = 0;
  std::optional<std::string> first_failure;

  void add(Outcome o, const std::string& why) {
    switch (o) {
      case Outcome::Pass: ++pass; break;
      case Outcome::Fail:
        ++fail;
        if (!first_failure) first_failure = why;
        break;
      case Outcome::Inconclusive: ++inconclusive; break;
      case Outcome::Vacuous: ++vacuous; break;
      case Outcome::Skipped: ++skipped; break;
    }
  }

  void fill(CheckEntry& e) const {
    if (fail > 0) {
      e.status = Status::Fail;
    } else if (pass > 0 && inconclusive == 0) {
      e.status = Status::Pass;
    } else {
      e.status = Status::Inconclusive;
    }
    e.detail = "pass=" + std::to_string(pass) + " inconclusive=" + std::to_string(inconclusive) +
               " vacuous=" + std::to_string(vacuous) + " skipped=" + std::to_string(skipped);
    e.counterexample = first_failure;
  }
};

std::string error_text(const Error& e) { return e.what(); }

// Known prefix of an orbit: points with trusted valuations.
struct Trace {
  std::vector<Point> points;
  std::vector<Radius> radii;
  bool pole = false;
};

Trace trace(const Point& x, const MapParams& params, std::int64_t horizon, const OrbitOptions& opts) {
  const OrbitRecord rec = orbit(x, params, horizon, opts);
  Trace t;
  const std::size_t n = std::min(rec.points.size(), rec.valuations.size());
  for (std::size_t i = 0; i < n; ++i) {
    t.points.push_back(rec.points[i]);
    t.radii.push_back(Radius::of(rec.valuations[i]));
  }
  t.pole = rec.termination == OrbitRecord::Termination::PoleHit;
  return t;
}

std::string where(const Point& x, std::int64_t n, long p, const Radius& expected, const Radius& got) {
  return "x = " + to_string(x) + ", n = " + std::to_string(n) + ": expected " + expected.to_string(p) + ", got " +
         got.to_string(p);
}

Outcome bridge_sample(const Point& x, const MapParams& params, const RadiusMapSpec& spec, std::int64_t horizon,
                      const OrbitOptions& opts, std::string& why) {
  const Trace t = trace(x, params, horizon, opts);
  if (t.radii.size() < 2) return Outcome::Skipped;
  Radius r = t.radii.front();
  for (std::size_t n = 0; n + 1 < t.radii.size(); ++n) {
    Radius next;
    try {
      const Branch br = branch_of(r, spec);
      next = br.kind == Branch::Kind::Critical ? critical_value_at(t.points[n], params, br.sphere)
                                               : radius_step(r, spec);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PrecisionExhausted || e.kind() == ErrorKind::PoleHit) {
        return n > 0 ? Outcome::Pass : Outcome::Skipped;
      }
      throw;
    }
    if (next != t.radii[n + 1]) {
      why = where(x, static_cast<std::int64_t>(n + 1), params.p, next, t.radii[n + 1]);
      return Outcome::Fail;
    }
    r = next;
  }
  return Outcome::Pass;
}

Radius critical_radius(const MapParams& params, Sphere s) {
  return Radius::from_valuation(s == Sphere::B ? params.val_b() : params.val_c());
}

struct ClaimContext {
  const MapParams& params;
  const RadiusMapSpec& spec;
  std::int64_t threshold;
};

bool fixed_non_critical(const Radius& r, const RadiusMapSpec& spec) {
  if (r.is_zero()) return true;
  if (!r.is_finite()) return false;
  const Branch br = branch_of(r, spec);
  return br.kind == Branch::Kind::Affine && radius_step(r, spec) == r;
}

Outcome evaluate_claim(const RegionClaim& claim, const Point& x, const Trace& t, const ClaimContext& ctx,
                       std::string& why) {
  const long p = ctx.params.p;
  const auto& radii = t.radii;
  if (radii.empty()) return Outcome::Skipped;
  const Radius small = Radius::from_valuation(HalfInt::from_int(ctx.threshold));
  const Radius large = Radius::from_valuation(HalfInt::from_int(-ctx.threshold));
  const Radius crit = critical_radius(ctx.params, claim.sphere);

  // Index of the critical value in the condition's set, when a condition holds.
  std::optional<std::int64_t> cond_index;
  std::size_t visit = 0;
  if (claim.condition) {
    const Radius cond_crit = critical_radius(ctx.params, claim.condition->sphere);
    const auto it = std::find(radii.begin(), radii.end(), cond_crit);
    if (it == radii.end()) return Outcome::Vacuous;
    visit = static_cast<std::size_t>(it - radii.begin());
    const Radius cv = critical_value_at(t.points[visit], ctx.params, claim.condition->sphere);
    cond_index = cv.is_finite() ? member_exceptional(cv, claim.condition->set) : std::nullopt;
    if (cond_index.has_value() != claim.condition->member) return Outcome::Vacuous;
  }

  switch (claim.effect) {
    case Effect::Invariant:
    case Effect::SiegelDisk:
      if (t.pole) return Outcome::Skipped;
      if (radii.size() < 2) return Outcome::Inconclusive;
      for (std::size_t n = 1; n < radii.size(); ++n) {
        if (radii[n] != radii[0]) {
          why = where(x, static_cast<std::int64_t>(n), p, radii[0], radii[n]);
          return Outcome::Fail;
        }
      }
      return Outcome::Pass;
    case Effect::ToZero:
      for (std::size_t n = 0; n < radii.size(); ++n) {
        if (radii[n] <= small) return Outcome::Pass;
        if (radii[n] >= large) {
          why = where(x, static_cast<std::int64_t>(n), p, small, radii[n]);
          return Outcome::Fail;
        }
      }
      return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
    case Effect::ToInfinity:
      for (std::size_t n = 0; n < radii.size(); ++n) {
        if (radii[n] >= large) return Outcome::Pass;
        if (radii[n] <= small) {
          why = where(x, static_cast<std::int64_t>(n), p, large, radii[n]);
          return Outcome::Fail;
        }
      }
      return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
    case Effect::EventuallyConstant:
      for (std::size_t n = 0; n < radii.size(); ++n) {
        if (!fixed_non_critical(radii[n], ctx.spec)) continue;
        for (std::size_t m = n + 1; m < radii.size(); ++m) {
          if (radii[m] != radii[n]) {
            why = where(x, static_cast<std::int64_t>(m), p, radii[n], radii[m]);
            return Outcome::Fail;
          }
        }
        return Outcome::Pass;
      }
      return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
    case Effect::ReachesCritical: {
      const auto k = member_exceptional(radii[0], *claim.region.set);
      if (!k) return Outcome::Skipped;
      if (static_cast<std::size_t>(*k) >= radii.size()) return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
      if (radii[static_cast<std::size_t>(*k)] != crit) {
        why = where(x, *k, p, crit, radii[static_cast<std::size_t>(*k)]);
        return Outcome::Fail;
      }
      return Outcome::Pass;
    }
    case Effect::ReturnsToCritical: {
      const std::size_t n = visit + static_cast<std::size_t>(*cond_index) + 1;
      if (n >= radii.size()) return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
      if (radii[n] != crit) {
        why = where(x, static_cast<std::int64_t>(n), p, crit, radii[n]);
        return Outcome::Fail;
      }
      return Outcome::Pass;
    }
    case Effect::TwoCycle:
      if (t.pole) return Outcome::Skipped;
      if (radii.size() < 3) return Outcome::Inconclusive;
      for (std::size_t n = 2; n < radii.size(); n += 2) {
        if (radii[n] != radii[0]) {
          why = where(x, static_cast<std::int64_t>(n), p, radii[0], radii[n]);
          return Outcome::Fail;
        }
      }
      return Outcome::Pass;
    case Effect::EntersLambda:
      for (std::size_t n = 1; n < radii.size(); ++n) {
        if (radii[n].is_finite() && claim.region.lambda->contains(radii[n])) return Outcome::Pass;
      }
      return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
    case Effect::Dichotomy: {
      std::size_t n = 1;
      while (n < radii.size() && radii[n] == radii[0]) ++n;
      if (n == radii.size()) return t.pole ? Outcome::Skipped : Outcome::Inconclusive;
      for (std::size_t m = n + 1; m < radii.size(); ++m) {
        if (radii[m] != radii[n]) {
          why = where(x, static_cast<std::int64_t>(m), p, radii[n], radii[m]);
          return Outcome::Fail;
        }
      }
      return Outcome::Pass;
    }
  }
  return Outcome::Inconclusive;
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

CheckEntry entry(std::string name, std::string tag, Status s, std::string detail, std::int64_t samples = 1) {
  CheckEntry e;
  e.name = std::move(name);
  e.tag = std::move(tag);
  e.status = s;
  e.detail = std::move(detail);
  e.samples = samples;
  return e;
}

std::string characters_text(const std::vector<Character>& cs) {
  std::string out;
  for (const Character c : cs) out += (out.empty() ? "" : " or ") + std::string(to_string(c));
  return out;
}

}  // namespace

CheckEntry check_lemma1(const MapParams& params, std::int64_t sample_count, std::int64_t horizon,
                        std::uint64_t seed, const OrbitOptions& orbit_opts) {
  const RadiusMapSpec spec = params.radius_spec();
  const auto points = sample_points(params, representable_probe_radii(params), sample_count, seed, "lemma1");
  Tally tally;
  for (const Point& x : points) {
    std::string why;
    Outcome o;
    try {
      o = bridge_sample(x, params, spec, horizon, orbit_opts, why);
    } catch (const Error& e) {
      o = Outcome::Fail;
      why = "x = " + to_string(x) + ": " + error_text(e);
    }
    tally.add(o, why);
  }
  CheckEntry e;
  e.name = "lemma1.bridge";
  e.tag = "L1";
  e.samples = static_cast<std::int64_t>(points.size());
  tally.fill(e);
  return e;
}

std::vector<CheckEntry> check_portrait(const MapParams& params, const PhasePortrait& portrait,
                                       std::int64_t sample_count, std::int64_t horizon, std::uint64_t seed,
                                       std::int64_t threshold, const OrbitOptions& orbit_opts) {
  const RadiusMapSpec spec = params.radius_spec();
  const ClaimContext ctx{params, spec, threshold};
  const auto probes = representable_probe_radii(params);
  std::vector<CheckEntry> out;
  const auto claims = portrait.region_claims();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const RegionClaim& claim = claims[i];
    std::vector<Radius> radii;
    std::copy_if(probes.begin(), probes.end(), std::back_inserter(radii),
                 [&](const Radius& r) { return claim.region.contains(r); });
    const std::string salt = claim.tag + "#" + std::to_string(i);
    const auto points = sample_points(params, radii, sample_count, seed, salt);
    Tally tally;
    for (const Point& x : points) {
      std::string why;
      Outcome o;
      try {
        o = evaluate_claim(claim, x, trace(x, params, horizon, orbit_opts), ctx, why);
      } catch (const Error& e) {
        o = e.kind() == ErrorKind::PrecisionExhausted ? Outcome::Inconclusive : Outcome::Fail;
        why = "x = " + to_string(x) + ": " + error_text(e);
      }
      tally.add(o, why);
    }
    CheckEntry e;
    e.name = "portrait." + std::string(to_string(claim.effect));
    e.tag = claim.tag;
    e.samples = static_cast<std::int64_t>(points.size());
    tally.fill(e);
    e.detail = claim.statement(params.p) + "; " + (radii.empty() ? "no representable probe radius; " : "") + e.detail;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CheckEntry> check_fixed_points(const MapParams& params, const PhasePortrait& portrait,
                                           std::int64_t sample_count, std::uint64_t seed) {
  const long p = params.p;
  std::vector<CheckEntry> out;
  std::array<FixedPointInfo, 3> fps;
  std::array<FixedPointInfo, 3> swapped;
  try {
    fps = fixed_points(params);
    swapped = fixed_points(params, true);
  } catch (const Error& e) {
    out.push_back(entry("fixed_points", "fixed points", e.kind() == ErrorKind::PrecisionExhausted ? Status::Inconclusive : Status::Fail,
                        error_text(e)));
    return out;
  }

  const bool residuals = std::all_of(fps.begin(), fps.end(), [](const FixedPointInfo& f) { return f.residual_ok; });
  std::string res_detail;
  for (const auto& f : fps) res_detail += std::string(to_string(f.which)) + " = " + to_string(f.location) + "; ";
  out.push_back(entry("fixed_points.residual", "f(x_i) = x_i", residuals ? Status::Pass : Status::Fail, res_detail, 3));

  const BigRational lambda0 = params.a * params.b * params.b / (params.c * params.c);
  const bool x0_ok = std::holds_alternative<BigRational>(fps[0].multiplier) &&
                     std::get<BigRational>(fps[0].multiplier) == lambda0;
  const bool mult = x0_ok && fps[1].multiplier_matches && fps[2].multiplier_matches;
  std::string mult_detail = "x0: " + to_string(fps[0].multiplier) + " (ab^2/c^2 = " + lambda0.to_string() + "); ";
  for (int i = 1; i <= 2; ++i) {
    mult_detail += std::string(to_string(fps[i].which)) + ": " + to_string(fps[i].multiplier) + " vs closed form " +
                   to_string(fps[i].closed_form_multiplier) + "; ";
  }
  out.push_back(entry("fixed_points.multiplier", "f'(x_i)", mult ? Status::Pass : Status::Fail, mult_detail, 3));

  bool swap_ok = false;
  try {
    swap_ok = points_equal(fps[1].location, swapped[2].location) && points_equal(fps[2].location, swapped[1].location);
  } catch (const Error& e) {
    out.push_back(entry("fixed_points.branch_swap", "sqrt(a) -> -sqrt(a)", Status::Inconclusive, error_text(e)));
  }
  if (out.back().name != "fixed_points.branch_swap") {
    out.push_back(entry("fixed_points.branch_swap", "sqrt(a) -> -sqrt(a)", swap_ok ? Status::Pass : Status::Fail,
                        swap_ok ? "negating sqrt(a) swaps x1 and x2" : "x1, x2 not permuted", 2));
  }

  for (const FixedPointReport& rep : portrait.fixed_point_reports) {
    const std::string who(to_string(rep.which));
    if (rep.location) {
      const std::string got = rep.info ? Radius::of(point_val(rep.info->location, p)).to_string(p) : "?";
      Status s = Status::Inconclusive;
      if (rep.location_agrees) s = *rep.location_agrees ? Status::Pass : Status::Flagged;
      std::string detail = who + ": claimed " + rep.location->describe(p) + ", |" + who + "| = " + got;
      if (s == Status::Flagged) detail = "DISCREPANCY " + detail;
      out.push_back(entry("fixed_points.location", rep.location_tag, s, detail));
    }
    if (!rep.admissible.empty()) {
      Status s = Status::Inconclusive;
      if (rep.character_agrees) s = *rep.character_agrees ? Status::Pass : Status::Flagged;
      std::string detail = who + ": claimed " + characters_text(rep.admissible) + ", |f'| = " +
                           (rep.info ? rep.info->multiplier_abs.to_string(p) + " (" +
                                           std::string(to_string(rep.info->character)) + ")"
                                     : "?");
      if (s == Status::Flagged) detail = "DISCREPANCY " + detail;
      out.push_back(entry("fixed_points.character", rep.character_tag, s, detail));
    }
    if (rep.expansion_ball && rep.info) {
      // |f(x) - x_i| > |x - x_i| on U_rho(x_i): sample x = x_i + d with |d| < rho.
      std::vector<Radius> radii;
      for (const Radius& r : representable_probe_radii(params)) {
        if (r < *rep.expansion_ball && r.valuation().is_integer()) radii.push_back(r);
      }
      Tally tally;
      std::int64_t n = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(sample_count) && !radii.empty(); ++i, ++n) {
        const Radius& r = radii[i % radii.size()];
        const Point d = sample_sphere(r, params, 1, derive_seed(seed, "expansion" + who, static_cast<std::int64_t>(i))).front();
        const Point x = add_rational(rep.info->location, std::get<BigRational>(d), params);
        try {
          const auto dist = difference_abs(eval_f(x, params), rep.info->location, p);
          if (!dist) {
            tally.add(Outcome::Skipped, "");
          } else if (*dist > r) {
            tally.add(Outcome::Pass, "");
          } else {
            const BigRational& q = std::get<BigRational>(d);
            const std::string offset = q.sign() < 0 ? " - " + to_string(Point(-q)) : " + " + to_string(d);
            tally.add(Outcome::Fail, "x = " + who + offset + ": |f(x) - " + who + "| = " +
                                         dist->to_string(p) + " <= " + r.to_string(p));
          }
        } catch (const Error& e) {
          tally.add(e.kind() == ErrorKind::PoleHit ? Outcome::Skipped : Outcome::Inconclusive, "");
        }
      }
      CheckEntry e;
      e.name = "fixed_points.expansion";
      e.tag = rep.character_tag;
      e.samples = n;
      tally.fill(e);
      e.detail = who + ": |f(x) - " + who + "| > |x - " + who + "| on U_" + rep.expansion_ball->to_string(p) + "; " + e.detail;
      // The ball contains the other fixed point whenever the distance claim is off.
      if (e.status == Status::Fail) {
        e.status = Status::Flagged;
        e.detail = "DISCREPANCY " + e.detail;
      }
      out.push_back(std::move(e));
    }
  }

  if (portrait.distance) {
    const DistanceClaim& dc = *portrait.distance;
    std::string detail = "stated " + dc.stated.to_string(p) + ", recomputed |2|*sqrt|a|*|c-b|/|a-1| = " +
                         dc.recomputed.to_string(p);
    if (dc.observed) detail += ", observed |x1 - x2| = " + dc.observed->to_string(p);
    Status s = dc.agrees() ? Status::Pass : Status::Flagged;
    if (dc.observed && *dc.observed != dc.recomputed) s = Status::Fail;
    if (s == Status::Flagged) detail = "DISCREPANCY " + detail;
    out.push_back(entry("fixed_points.distance", dc.tag, s, detail));
  }
  return out;
}

std::vector<RadiusMapSpec> critical_value_grid(const RadiusMapSpec& spec) {
  const auto probes = probe_radii(spec);
  auto candidates = [&](Sphere s) {
    // A zero critical value needs x = -b on the sphere, so only S_|b| admits it.
    std::vector<Radius> out;
    if (s == Sphere::B) out.push_back(Radius::zero());
    for (const Radius& r : probes) {
      try {
        spec.with_critical(s, r).validate();
        out.push_back(r);
      } catch (const Error&) {
      }
    }
    return out;
  };
  std::vector<RadiusMapSpec> grid{spec};
  if (spec.regime == Regime::EQ) {
    for (const Radius& r : candidates(Sphere::B)) grid.push_back(spec.with_critical(Sphere::B, r));
    return grid;
  }
  const auto bs = candidates(Sphere::B);
  const auto cs = candidates(Sphere::C);
  for (const Radius& rb : bs) grid.push_back(spec.with_critical(Sphere::B, rb));
  for (const Radius& rc : cs) grid.push_back(spec.with_critical(Sphere::C, rc));
  for (const Radius& rb : bs) {
    for (const Radius& rc : cs) grid.push_back(spec.with_critical(Sphere::B, rb).with_critical(Sphere::C, rc));
  }
  return grid;
}

std::vector<CheckEntry> check_radius_lemmas(const std::vector<RadiusMapSpec>& spec_grid,
                                            const std::vector<Radius>& probe, std::int64_t horizon) {
  Tally limits, fixes, lambda;
  std::int64_t n_limits = 0, n_fixes = 0, n_lambda = 0, n_table = 0, table_disagree = 0;
  std::optional<std::string> table_example;
  const std::int64_t steps = std::max<std::int64_t>(horizon, 64);

  for (const RadiusMapSpec& spec : spec_grid) {
    const long p = spec.p;
    const std::string ctx = spec.describe();
    for (const Radius& r : probe) {
      ++n_limits;
      const LimitResult lr = limit_classify(r, spec);
      const RadiusOrbitResult ro = radius_orbit(r, spec, steps);
      const std::string where_r = ctx + ", r = " + r.to_string(p);
      if (lr.verdict.kind == Verdict::Kind::NeedsCriticalValue) {
        limits.add(ro.verdict.kind == Verdict::Kind::NeedsCriticalValue ? Outcome::Vacuous : Outcome::Fail,
                   where_r + ": closed form needs a critical value, orbit gave " + ro.verdict.to_string(p));
      } else if (ro.verdict.kind == Verdict::Kind::HorizonExceeded) {
        limits.add(Outcome::Inconclusive, "");
      } else if (orbit_consistent(lr.verdict, ro, r, spec)) {
        limits.add(Outcome::Pass, "");
      } else {
        limits.add(Outcome::Fail, where_r + ": closed form " + lr.verdict.to_string(p) + ", orbit " +
                                      ro.verdict.to_string(p));
      }
      if (!lr.item.empty() && lr.verdict.kind != Verdict::Kind::NeedsCriticalValue) {
        ++n_table;
        if (!lr.lemma_agrees) {
          ++table_disagree;
          if (!table_example) {
            table_example = where_r + ": " + lr.item + " states " + lr.lemma.to_string(p) + ", exact " +
                            lr.verdict.to_string(p);
          }
        }
      }
    }

    const FixSet fs = fix_set(spec);
    for (const Radius& r : probe) {
      if (!fs.contains(r)) continue;
      ++n_fixes;
      try {
        const Radius img = radius_step(r, spec);
        fixes.add(img == r ? Outcome::Pass : Outcome::Fail,
                  ctx + ": " + fs.item + " lists r = " + r.to_string(p) + " but psi(r) = " + img.to_string(p));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NeedsCriticalValue) throw;
        fixes.add(Outcome::Vacuous, "");
      }
    }

    if (has_lambda_interval(spec)) {
      const LambdaInterval lam = lambda_interval(spec);
      for (const Radius& r : lam.lattice_points(true)) {
        ++n_lambda;
        try {
          const Radius back = radius_step(radius_step(r, spec), spec);
          lambda.add(back == r ? Outcome::Pass : Outcome::Fail,
                     ctx + ": psi^2(" + r.to_string(p) + ") = " + back.to_string(p));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NeedsCriticalValue) throw;
          lambda.add(Outcome::Vacuous, "");
        }
      }
      for (const Radius& r : probe) {
        if (lam.contains(r)) continue;
        ++n_lambda;
        const RadiusOrbitResult ro = radius_orbit(r, spec, steps);
        const bool enters = std::any_of(ro.trajectory.begin() + 1, ro.trajectory.end(),
                                        [&](const Radius& x) { return x.is_finite() && lam.contains(x); });
        if (enters) {
          lambda.add(Outcome::Pass, "");
        } else if (ro.verdict.kind == Verdict::Kind::NeedsCriticalValue) {
          lambda.add(Outcome::Vacuous, "");
        } else {
          lambda.add(Outcome::Fail, ctx + ": r = " + r.to_string(p) + " never enters Lambda, " + ro.verdict.to_string(p));
        }
      }
    }
  }

  std::vector<CheckEntry> out;
  CheckEntry e1;
  e1.name = "radius.limit_vs_orbit";
  e1.tag = "L2-L4";
  e1.samples = n_limits;
  limits.fill(e1);
  out.push_back(e1);

  CheckEntry e2 = entry("radius.lemma_table", "L2-L4", table_disagree == 0 ? Status::Pass : Status::Flagged,
                        std::to_string(n_table - table_disagree) + " of " + std::to_string(n_table) +
                            " radii match the case tables",
                        n_table);
  if (table_example) e2.detail += "; first mismatch: " + *table_example;
  out.push_back(e2);

  CheckEntry e3;
  e3.name = "radius.fix_set";
  e3.tag = "L2-L4";
  e3.samples = n_fixes;
  fixes.fill(e3);
  out.push_back(e3);

  if (n_lambda > 0) {
    CheckEntry e4;
    e4.name = "radius.lambda";
    e4.tag = "L4.IV";
    e4.samples = n_lambda;
    lambda.fill(e4);
    out.push_back(e4);
  }
  return out;
}

VerificationReport verify(const MapParams& params, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.params = params;
  rep.seed = opts.seed;
  rep.horizon = opts.horizon;
  rep.samples = opts.samples;
  const PhasePortrait portrait = classify(params);
  rep.leaf = portrait.leaf;
  rep.flags = portrait.flags;

  rep.checks.push_back(check_lemma1(params, opts.samples, opts.horizon, opts.seed, opts.orbit));
  for (auto& e : check_fixed_points(params, portrait, opts.samples, opts.seed)) rep.checks.push_back(std::move(e));
  for (auto& e : check_portrait(params, portrait, opts.samples, opts.horizon, opts.seed, opts.threshold, opts.orbit)) {
    rep.checks.push_back(std::move(e));
  }
  const RadiusMapSpec spec = params.radius_spec();
  for (auto& e : check_radius_lemmas(critical_value_grid(spec), probe_radii(spec), opts.horizon)) {
    rep.checks.push_back(std::move(e));
  }
  return rep;
}

}  // namespace udyn
