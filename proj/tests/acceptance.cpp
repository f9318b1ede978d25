// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "udyn/error.hpp"
#include "udyn/limit.hpp"
#include "udyn/map.hpp"
#include "udyn/oracle.hpp"
#include "udyn/portrait.hpp"
#include "udyn/sampling.hpp"
#include "udyn_cli/cli.hpp"

using namespace udyn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

MapParams P(long p, const char* a, const char* b, const char* c) {
  return validate_params(p, BigRational::parse(a), BigRational::parse(b), BigRational::parse(c));
}

Radius R(std::int64_t val) { return Radius::from_valuation(HalfInt::from_int(val)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv{"udyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

Outcome ultrametric() {
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t pairs = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(p));
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    std::uniform_int_distribution<long> shift(-6, 6);
    for (int i = 0; i < 10000; ++i) {
      const BigRational x = BigRational(BigInt(num(rng)), BigInt(den(rng))) * pow_p(p, shift(rng));
      const BigRational y = BigRational(BigInt(num(rng)), BigInt(den(rng))) * pow_p(p, shift(rng));
      const Valuation vx = vp_rat(x, p), vy = vp_rat(y, p), vs = vp_rat(x + y, p);
      if (vp_rat(x * y, p) != vx + vy) return {false, "multiplicativity fails at " + x.to_string() + ", " + y.to_string()};
      if (vs < std::min(vx, vy)) return {false, "ultrametric fails at " + x.to_string() + ", " + y.to_string()};
      if (vx != vy && vs != std::min(vx, vy)) return {false, "equality case fails at " + x.to_string()};
      ++pairs;
    }
  }
  const double s = seconds_since(t0);
  return {s < 5.0, std::to_string(pairs) + " pairs over p in {2,3,5,7} in " + fmt_seconds(s)};
}

Outcome lemma1_bridge() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<MapParams> sets = {
      P(3, "9", "3", "1"), P(3, "2", "3", "1"), P(3, "1/9", "3", "2"), P(5, "1/5", "25", "1"),
      P(3, "9", "1", "2"), P(5, "2", "1", "3"), P(3, "1/9", "1", "2"),
      P(3, "9", "1", "9"), P(3, "4", "1", "3"), P(3, "1/9", "1", "3"),
      P(2, "8", "2", "1"), P(2, "4", "2", "1"),
  };
  std::int64_t samples = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const CheckEntry e = check_lemma1(sets[i], 20, 15, i);
    samples += e.samples;
    if (e.status != Status::Pass) {
      return {false, sets[i].to_string() + ": " + e.detail + (e.counterexample ? " " + *e.counterexample : "")};
    }
  }
  const double s = seconds_since(t0);
  return {s < 30.0, std::to_string(sets.size()) + " parameter sets, " + std::to_string(samples) +
                        " orbits, horizon 15, in " + fmt_seconds(s)};
}

Outcome fixed_point_algebra() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(1, 30);
  std::uniform_int_distribution<int> e(-2, 2);
  const long primes[] = {2, 3, 5, 7, 11};
  int tested = 0, attempts = 0;
  while (tested < 50 && attempts < 10000) {
    ++attempts;
    const long p = primes[attempts % 5];
    const BigRational a = BigRational(u(rng)) * (u(rng) % 2 ? BigRational(1) : BigRational(-1)) * pow_p(p, e(rng));
    const BigRational b = BigRational(u(rng)) * pow_p(p, e(rng));
    const BigRational c = BigRational(-u(rng)) * pow_p(p, e(rng));
    MapParams mp;
    try {
      mp = validate_params(p, a, b, c);
    } catch (const Error&) {
      continue;
    }
    if (mp.sqrt_mode.kind == SqrtKind::QpSquareNotRational) continue;
    for (const auto& f : fixed_points(mp)) {
      if (!f.residual_ok || !f.multiplier_matches) return {false, mp.to_string() + " " + std::string(to_string(f.which))};
    }
    ++tested;
  }
  const auto fps = fixed_points(P(3, "4", "1", "3"));
  const bool worked = std::get<BigRational>(fps[1].location) == BigRational(1) &&
                      std::get<BigRational>(fps[2].location) == BigRational::parse("-5/3") &&
                      std::get<BigRational>(fps[1].multiplier) == BigRational::parse("3/2") &&
                      std::get<BigRational>(fps[2].multiplier) == BigRational::parse("17/2");
  return {tested == 50 && worked, std::to_string(tested) + " parameter sets exact; (3,4,1,3): x1 = " +
                                      to_string(fps[1].location) + ", x2 = " + to_string(fps[2].location) +
                                      ", multipliers " + to_string(fps[1].multiplier) + ", " +
                                      to_string(fps[2].multiplier)};
}

Outcome worked_valuation() {
  const MapParams mp = P(3, "9", "3", "1");
  const Point y = eval_f(Point(BigRational(9)), mp);
  const bool ok = std::get<BigRational>(y) == BigRational::parse("2916/25") && point_val(y, 3) == Valuation::of_int(6) &&
                  abs_f(Point(BigRational(9)), mp) == R(6);
  return {ok, "f(9) = " + to_string(y) + ", |f(9)|_3 = " + Radius::of(point_val(y, 3)).to_string(3)};
}

/// Samples `per_radius` points on each sphere in `radii` and applies `test` to their orbits.
Outcome sample_orbits(const MapParams& mp, const std::vector<Radius>& radii, std::size_t per_radius,
                      std::int64_t horizon, std::uint64_t seed,
                      const std::function<bool(const OrbitRecord&)>& test, std::int64_t& count) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (const Point& x : sample_sphere(radii[i], mp, per_radius, seed + i)) {
      const OrbitRecord rec = orbit(x, mp, horizon);
      if (rec.termination != OrbitRecord::Termination::Completed || !test(rec)) {
        return {false, "x = " + to_string(x) + " (" + rec.termination_name() + ")"};
      }
      ++count;
    }
  }
  return {true, ""};
}

Outcome basin_claims() {
  // |a| = 1, |b| = 1/3 < |c| = 1.
  const MapParams mp = P(3, "2", "3", "1");
  if (classify(mp).leaf != "T1.3") return {false, "classifier leaf is " + classify(mp).leaf};
  std::int64_t inside = 0, outside = 0;
  const auto reaches = [](const OrbitRecord& r) {
    return std::any_of(r.valuations.begin(), r.valuations.end(),
                       [](const Valuation& v) { return v >= Valuation::of_int(20); });
  };
  Outcome o = sample_orbits(mp, {R(1), R(2), R(3), R(4), R(5)}, 10, 30, 500, reaches, inside);
  if (!o.ok) return {false, "basin: " + o.detail};
  const auto constant = [](const OrbitRecord& r) {
    return std::all_of(r.valuations.begin(), r.valuations.end(), [&](const Valuation& v) { return v == r.valuations[0]; });
  };
  o = sample_orbits(mp, {R(-1), R(-2), R(-3), R(-4), R(-5)}, 10, 30, 600, constant, outside);
  if (!o.ok) return {false, "invariant sphere: " + o.detail};
  return {true, std::to_string(inside) + " points with |x| < |c| reach |f^n(x)| <= 3^-20 within 30 steps; " +
                    std::to_string(outside) + " points with |x| > |c| stay on their spheres"};
}

Outcome siegel_claims() {
  // |a| = 9, |b| = 1/3, |c| = 1, |ab^2| = |c^2|.
  const MapParams mp = P(3, "1/9", "3", "2");
  if (classify(mp).leaf != "T1.4.2") return {false, "classifier leaf is " + classify(mp).leaf};
  std::int64_t inside = 0, outside = 0;
  const auto constant = [](const OrbitRecord& r) {
    return std::all_of(r.valuations.begin(), r.valuations.end(), [&](const Valuation& v) { return v == r.valuations[0]; });
  };
  Outcome o = sample_orbits(mp, {R(2), R(3), R(4), R(5), R(6)}, 10, 30, 700, constant, inside);
  if (!o.ok) return {false, "Siegel disk: " + o.detail};
  const auto escapes = [](const OrbitRecord& r) {
    return std::any_of(r.valuations.begin(), r.valuations.end(),
                       [](const Valuation& v) { return v <= Valuation::of_int(-20); });
  };
  o = sample_orbits(mp, {R(0), R(-1), R(-2), R(-3), R(-4)}, 10, 30, 800, escapes, outside);
  if (!o.ok) return {false, "escape: " + o.detail};
  return {true, std::to_string(inside) + " points with |x| < |b| keep their valuation for 30 steps; " +
                    std::to_string(outside) + " points with |x| > |b| exceed 3^20"};
}

Outcome lambda_claims() {
  CriticalValues cv;
  cv.b_prime = R(3);   // b' = 3^-3
  cv.c_prime = R(-1);  // c' = 3^1
  const RadiusMapSpec spec = RadiusMapSpec::make(3, HalfInt::from_int(2), HalfInt::from_int(0), HalfInt::from_int(2), cv);
  spec.validate();
  const LambdaInterval lam = lambda_interval(spec);
  const auto inside = lam.lattice_points(true);
  for (const auto& r : inside) {
    if (radius_step(radius_step(r, spec), spec) != r) return {false, "psi^2(r) != r at r = " + r.to_string(3)};
  }
  int entered = 0;
  for (int twice = -12; twice <= 16 && entered < 20; ++twice) {
    const Radius r = Radius::from_valuation(HalfInt::from_twice(twice));
    if (lam.contains(r)) continue;
    Radius s = r;
    int k = 0;
    do {
      s = radius_step(s, spec);
      ++k;
    } while (!lam.contains(s) && k < 200);
    if (!lam.contains(s)) return {false, "r = " + r.to_string(3) + " does not enter Lambda"};
    if (limit_classify(r, spec).verdict.kind != Verdict::Kind::EventuallyInLambda) {
      return {false, "limit_classify disagrees at r = " + r.to_string(3)};
    }
    ++entered;
  }
  // Point level: a = 9, b = 1, c = 9 realises these valuations.
  const MapParams mp = P(3, "9", "1", "9");
  std::int64_t returned = 0;
  for (const auto& r : lam.lattice_points(mp.half_integer_radii())) {
    for (const Point& x : sample_sphere(r, mp, 20, 900)) {
      const OrbitRecord rec = orbit(x, mp, 20);
      for (std::size_t k = 0; k < rec.valuations.size(); k += 2) {
        if (rec.valuations[k] != rec.valuations[0]) return {false, "f^2 leaves S_r at x = " + to_string(x)};
      }
      ++returned;
    }
  }
  return {entered == 20 && returned > 0,
          lam.to_string() + ": " + std::to_string(inside.size()) + " lattice radii satisfy psi^2(r) = r, " +
              std::to_string(entered) + " outside radii enter Lambda, " + std::to_string(returned) +
              " points return under f^2 for 10 double steps"};
}

Outcome p2_thresholds() {
  struct Family {
    const char* a;
    Character expected;
  };
  const Family families[] = {{"8", Character::Repelling}, {"4", Character::Attracting}, {"2", Character::Indifferent}};
  const std::pair<const char*, const char*> bc[] = {{"2", "1"}, {"6", "5"}, {"-2", "3"}};
  std::string detail;
  for (const auto& f : families) {
    for (const auto& [b, c] : bc) {
      const MapParams mp = P(2, f.a, b, c);
      for (FixedPointId w : {FixedPointId::X1, FixedPointId::X2}) {
        const CharacterCheck chk = character_from_multiplier(mp, w);
        if (chk.computed != f.expected || chk.agrees != std::optional<bool>(true) || chk.tag != "T1.2.5") {
          return {false, mp.to_string() + " " + std::string(to_string(w)) + ": " + std::string(to_string(chk.computed)) +
                             " [" + chk.tag + "]"};
        }
      }
    }
    detail += std::string(detail.empty() ? "" : ", ") + "|a| = 1/" + f.a + " " + std::string(to_string(f.expected));
  }
  return {true, detail + " (T1.2.5)"};
}

Outcome discrepancy() {
  const PhasePortrait pp = classify(P(3, "9", "3", "1"));
  if (!pp.distance) return {false, "no distance claim"};
  const bool flagged = std::any_of(pp.flags.begin(), pp.flags.end(),
                                   [](const std::string& f) { return f.rfind("DISCREPANCY T1.2.3", 0) == 0; });
  std::string out;
  const int code = run_cli({"verify", "--p", "3", "--a", "9", "--b", "3", "--c", "1"}, out);
  const bool rendered = out.find("FLAG DISCREPANCY T1.2.3") != std::string::npos;
  const bool ok = pp.distance->tag == "T1.2.3" && pp.distance->recomputed == R(1) && flagged && code == 0 && rendered;
  return {ok, "stated " + pp.distance->stated.to_string(3) + ", recomputed " + pp.distance->recomputed.to_string(3) +
                  ", flagged, verify exit " + std::to_string(code)};
}

Outcome determinism() {
  const std::vector<std::string> args = {"verify", "--p", "3", "--a", "4", "--b", "1", "--c", "3",
                                         "--seed", "7", "--output", "json"};
  std::string first, second;
  const int c1 = run_cli(args, first);
  const int c2 = run_cli(args, second);
  return {c1 == c2 && first == second && !first.empty(),
          std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ultrametric suite", ultrametric},
      {"lemma-1 bridge", lemma1_bridge},
      {"fixed-point algebra", fixed_point_algebra},
      {"worked valuation f(9)", worked_valuation},
      {"basin claims (T1.3)", basin_claims},
      {"siegel claims (T1.4.2)", siegel_claims},
      {"lambda two-cycles (T3.IV)", lambda_claims},
      {"p = 2 thresholds", p2_thresholds},
      {"discrepancy handling", discrepancy},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
