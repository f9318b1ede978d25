#include "udyn_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "udyn/error.hpp"
#include "udyn/limit.hpp"
#include "udyn/map.hpp"
#include "udyn/oracle.hpp"
#include "udyn/params.hpp"
#include "udyn/portrait.hpp"
#include "udyn/quad.hpp"
#include "udyn/serialize.hpp"

namespace udyn::cli {

namespace {

struct Raw {
  std::string x, r, seed, bstar, cstar, bhat, bprime, cprime;
};

void add_params(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime p")->required();
  sub->add_option("--a", cfg.a, "a as n or n/d")->required();
  sub->add_option("--b", cfg.b, "b as n or n/d")->required();
  sub->add_option("--c", cfg.c, "c as n or n/d")->required();
}

void add_common(CLI::App* sub, CliConfig& cfg, Raw& raw) {
  sub->add_option("--precision", cfg.precision, "relative p-adic digits in truncated mode")->check(CLI::PositiveNumber);
  sub->add_flag("--force-truncated", cfg.force_truncated, "compute sqrt(a) by Hensel lifting");
  sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", raw.seed, "sampling seed (default: UDYN_SEED, else 0)");
}

void add_verify_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--horizon", cfg.horizon, "orbit steps per sample")->check(CLI::PositiveNumber);
  sub->add_option("--samples", cfg.samples, "points per check")->check(CLI::PositiveNumber);
}

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  try {
    if (text.empty() || text[0] < '0' || text[0] > '9') throw std::invalid_argument(text);
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, origin + ": seed '" + text + "' is not a non-negative integer");
  }
}

MapParams params_from(const CliConfig& cfg, long p, const std::string& a, const std::string& b,
                      const std::string& c) {
  return validate_params(p, BigRational::parse(a), BigRational::parse(b), BigRational::parse(c), cfg.precision,
                         cfg.force_truncated);
}

MapParams params_from(const CliConfig& cfg) { return params_from(cfg, cfg.p, cfg.a, cfg.b, cfg.c); }

VerifyOptions verify_options(const CliConfig& cfg) {
  VerifyOptions o;
  o.samples = cfg.samples;
  o.horizon = cfg.horizon;
  o.seed = cfg.seed.value_or(0);
  return o;
}

// Text renderings project the JSON documents; they list the same claims.

void text_claims(std::ostream& out, const std::string& title, const std::vector<RegionClaim>& claims, long p) {
  out << title << ":\n";
  if (claims.empty()) out << "  (none)\n";
  for (const auto& c : claims) out << "  [" << c.tag << "] " << c.statement(p) << "\n";
}

void text_portrait(std::ostream& out, const PhasePortrait& pp) {
  const long p = pp.params.p;
  out << "theorem " << to_string(pp.theorem) << ", leaf " << pp.leaf << "\n";
  out << "params " << pp.params.to_string() << "\n";
  text_claims(out, "invariant spheres", pp.invariant_spheres, p);
  text_claims(out, "basin of zero", pp.basin_of_zero, p);
  out << "siegel disk of zero:\n";
  if (pp.siegel_disk_zero) {
    out << "  [" << pp.siegel_disk_zero->tag << "] " << pp.siegel_disk_zero->statement(p) << "\n";
  } else {
    out << "  (none)\n";
  }
  text_claims(out, "escape", pp.escape_claims, p);
  text_claims(out, "orbit claims", pp.orbit_claims, p);
  out << "fixed points:\n";
  for (const auto& r : pp.fixed_point_reports) {
    const std::string who(to_string(r.which));
    if (r.info) {
      out << "  " << who << " = " << to_string(r.info->location) << "\n";
      out << "    multiplier " << to_string(r.info->multiplier) << ", |f'| = " << r.info->multiplier_abs.to_string(p)
          << " (" << to_string(r.info->character) << ")\n";
    } else {
      out << "  " << who << ": " << r.error << "\n";
    }
    if (r.location) {
      out << "    location [" << r.location_tag << "] " << r.location->describe(p) << ": "
          << (r.location_agrees ? (*r.location_agrees ? "agrees" : "DISAGREES") : "unknown") << "\n";
    }
    if (!r.admissible.empty()) {
      out << "    character [" << r.character_tag << "] ";
      for (std::size_t i = 0; i < r.admissible.size(); ++i) out << (i ? " or " : "") << to_string(r.admissible[i]);
      out << ": " << (r.character_agrees ? (*r.character_agrees ? "agrees" : "DISAGREES") : "unknown") << "\n";
    }
    if (r.expansion_ball) out << "    expansion on U_" << r.expansion_ball->to_string(p) << "(" << who << ")\n";
    if (!r.caveat.empty()) out << "    caveat: " << r.caveat << "\n";
  }
  if (pp.distance) {
    out << "distance [" << pp.distance->tag << "]: stated " << pp.distance->stated.to_string(p) << ", recomputed "
        << pp.distance->recomputed.to_string(p);
    if (pp.distance->observed) out << ", observed " << pp.distance->observed->to_string(p);
    out << "\n";
  }
  if (pp.exceptional_set) {
    const auto& s = *pp.exceptional_set;
    out << "exceptional set " << s.name() << ": " << s.element(0).to_string(s.p) << ", " << s.element(1).to_string(s.p)
        << ", " << s.element(2).to_string(s.p) << ", ...\n";
  }
  out << "flags:\n";
  if (pp.flags.empty()) out << "  (none)\n";
  for (const auto& f : pp.flags) out << "  " << f << "\n";
}

void text_fixed_point(std::ostream& out, const FixedPointInfo& f, long p) {
  out << to_string(f.which) << " = " << to_string(f.location) << " [" << domain_name(f.location) << "]\n";
  out << "  multiplier " << to_string(f.multiplier) << "\n";
  out << "  closed form " << to_string(f.closed_form_multiplier) << (f.multiplier_matches ? " (matches)" : " (MISMATCH)")
      << "\n";
  out << "  |f'| = " << f.multiplier_abs.to_string(p) << ", " << to_string(f.character) << "\n";
  out << "  f(x) = x: " << (f.residual_ok ? "yes" : "NO") << "\n";
}

void text_report(std::ostream& out, const VerificationReport& rep) {
  out << "verify " << rep.params.to_string() << " leaf " << rep.leaf << " seed " << rep.seed << " horizon "
      << rep.horizon << " samples " << rep.samples << "\n";
  for (const auto& e : rep.checks) {
    out << to_string(e.status) << " " << e.name << " [" << e.tag << "] n=" << e.samples << ": " << e.detail << "\n";
    if (e.counterexample) out << "  counterexample: " << *e.counterexample << "\n";
  }
  for (const auto& f : rep.flags) out << "FLAG " << f << "\n";
  out << "summary: PASS " << rep.count(Status::Pass) << ", FAIL " << rep.count(Status::Fail) << ", FLAGGED "
      << rep.count(Status::Flagged) << ", INCONCLUSIVE " << rep.count(Status::Inconclusive) << "\n";
}

Point parse_point(const std::string& text, const MapParams& params) {
  return normalize_point(parse_quad(text, params.a), params);
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
  const MapParams params = params_from(cfg);
  const PhasePortrait pp = classify(params);
  if (cfg.output == "json") {
    out << dump(portrait_json(pp));
  } else {
    text_portrait(out, pp);
  }
  return kOk;
}

int cmd_fixed_points(const CliConfig& cfg, std::ostream& out) {
  const MapParams params = params_from(cfg);
  const auto fps = fixed_points(params);
  if (cfg.output == "json") {
    out << dump(fixed_points_json(params, fps));
  } else {
    for (const auto& f : fps) text_fixed_point(out, f, params.p);
  }
  return kOk;
}

int cmd_orbit(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.x) throw Error(ErrorKind::InvalidArgument, "orbit needs --x");
  const MapParams params = params_from(cfg);
  const OrbitRecord rec = orbit(parse_point(*cfg.x, params), params, cfg.n);
  if (cfg.output == "json") {
    out << dump(orbit_json(params, rec));
    return kOk;
  }
  out << "step\tvaluation\tpoint\n";
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    out << i << "\t" << (i < rec.valuations.size() ? rec.valuations[i].to_string() : "?") << "\t"
        << to_string(rec.points[i]) << "\n";
  }
  out << "termination " << rec.termination_name() << " at step " << rec.step;
  if (rec.truncated_from) out << " (truncated from step " << *rec.truncated_from << ")";
  out << "\n";
  return kOk;
}

int cmd_radius_orbit(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.r) throw Error(ErrorKind::InvalidArgument, "radius-orbit needs --r");
  const MapParams params = params_from(cfg);
  const long p = params.p;
  auto rad = [&](const std::optional<std::string>& s) -> std::optional<Radius> {
    if (!s) return std::nullopt;
    return Radius::parse(*s, p);
  };
  CriticalValues cv;
  cv.b_star = rad(cfg.b_star);
  cv.c_star = rad(cfg.c_star);
  cv.b_hat = rad(cfg.b_hat);
  cv.b_prime = rad(cfg.b_prime);
  cv.c_prime = rad(cfg.c_prime);
  const RadiusMapSpec spec = params.radius_spec(cv);
  spec.validate();
  const Radius start = Radius::parse(*cfg.r, p);
  const RadiusOrbitResult ro = radius_orbit(start, spec, cfg.n);
  const LimitResult lr = limit_classify(start, spec);
  if (cfg.output == "json") {
    out << dump(radius_orbit_json(spec, start, ro, lr));
    return kOk;
  }
  out << spec.describe() << "\n";
  for (std::size_t i = 0; i < ro.trajectory.size(); ++i) out << i << "\t" << ro.trajectory[i].to_string(p) << "\n";
  out << "orbit verdict " << ro.verdict.to_string(p) << "\n";
  const char* agreement = lr.verdict.kind == Verdict::Kind::NeedsCriticalValue ? " (undetermined)"
                          : lr.lemma_agrees                                      ? " (agrees)"
                                                                                 : " (DISAGREES)";
  out << "limit " << lr.verdict.to_string(p) << " [" << lr.item << "] lemma " << lr.lemma.to_string(p) << agreement
      << "\n";
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const MapParams params = params_from(cfg);
  const VerificationReport rep = verify(params, verify_options(cfg));
  if (cfg.output == "json") {
    out << dump(report_json(rep));
  } else {
    text_report(out, rep);
  }
  return rep.has_failure() ? kVerifyFailed : kOk;
}

int cmd_grid(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.grid_file);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open grid file " + cfg.grid_file);
  Json runs = Json::array();
  std::string line;
  std::int64_t lineno = 0, failed = 0, degenerate = 0, total = 0;
  const VerifyOptions opts = verify_options(cfg);
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string p_text, a, b, c, extra;
    if (!(fields >> p_text)) continue;
    const std::string where = cfg.grid_file + ":" + std::to_string(lineno);
    if (!(fields >> a >> b >> c) || (fields >> extra)) {
      throw Error(ErrorKind::ParseError, where + ": expected 'p a b c'");
    }
    long p = 0;
    try {
      std::size_t used = 0;
      p = std::stol(p_text, &used);
      if (used != p_text.size()) throw std::invalid_argument(p_text);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, where + ": p = '" + p_text + "' is not an integer");
    }
    ++total;
    Json run;
    run["line"] = lineno;
    run["input"] = p_text + " " + a + " " + b + " " + c;
    try {
      const MapParams params = params_from(cfg, p, a, b, c);
      const VerificationReport rep = verify(params, opts);
      if (rep.has_failure()) ++failed;
      if (cfg.output == "json") {
        run["report"] = report_json(rep)["verification"];
      } else {
        out << "== " << where << "\n";
        text_report(out, rep);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateParams) {
        ++degenerate;
      } else if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument) {
        throw Error(e.kind(), where + ": " + e.what());
      } else {
        ++failed;
      }
      run["error"] = e.what();
      if (cfg.output != "json") out << "== " << where << "\nERROR " << e.what() << "\n";
      err << where << ": " << e.what() << "\n";
    }
    runs.push_back(run);
  }
  if (cfg.output == "json") {
    Json doc;
    doc["schema"] = kSchemaVersion;
    Json grid;
    grid["file"] = cfg.grid_file;
    grid["runs"] = runs;
    grid["total"] = total;
    grid["with_failures"] = failed;
    grid["degenerate"] = degenerate;
    doc["grid"] = grid;
    out << dump(doc);
  } else {
    out << "grid: " << total << " parameter sets, " << failed << " with failures, " << degenerate << " degenerate\n";
  }
  if (failed > 0) return kVerifyFailed;
  return degenerate > 0 ? kDegenerate : kOk;
}

}  // namespace

std::optional<int> parse(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamics of f(x) = a x ((x+b)/(x+c))^2 over the p-adic numbers", "udyn"};
  app.require_subcommand(1);
  Raw raw;

  auto* classify_cmd = app.add_subcommand("classify", "phase portrait of the parameters");
  add_params(classify_cmd, cfg);
  add_common(classify_cmd, cfg, raw);

  auto* fixed_cmd = app.add_subcommand("fixed-points", "fixed points and multipliers");
  add_params(fixed_cmd, cfg);
  add_common(fixed_cmd, cfg, raw);

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate f from a point");
  add_params(orbit_cmd, cfg);
  add_common(orbit_cmd, cfg, raw);
  orbit_cmd->add_option("--x", raw.x, "start point, n/d or u+v*sqrt(a)")->required();
  orbit_cmd->add_option("--n", cfg.n, "number of steps")->check(CLI::NonNegativeNumber);

  auto* radius_cmd = app.add_subcommand("radius-orbit", "iterate the radius map");
  add_params(radius_cmd, cfg);
  add_common(radius_cmd, cfg, raw);
  radius_cmd->add_option("--r", raw.r, "start radius: 0, inf, p^q or a power of p")->required();
  radius_cmd->add_option("--n", cfg.n, "maximum steps")->check(CLI::NonNegativeNumber);
  radius_cmd->add_option("--bstar", raw.bstar, "b* (|b| < |c|)");
  radius_cmd->add_option("--cstar", raw.cstar, "c* (|b| < |c|)");
  radius_cmd->add_option("--bhat", raw.bhat, "b^ (|b| = |c|)");
  radius_cmd->add_option("--bprime", raw.bprime, "b' (|b| > |c|)");
  radius_cmd->add_option("--cprime", raw.cprime, "c' (|b| > |c|)");

  auto* verify_cmd = app.add_subcommand("verify", "check every claim by exact iteration");
  add_params(verify_cmd, cfg);
  add_common(verify_cmd, cfg, raw);
  add_verify_options(verify_cmd, cfg);

  auto* grid_cmd = app.add_subcommand("grid", "verify each 'p a b c' line of a file");
  grid_cmd->add_option("file", cfg.grid_file, "grid file")->required();
  add_common(grid_cmd, cfg, raw);
  add_verify_options(grid_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  cfg.x = opt(raw.x);
  cfg.r = opt(raw.r);
  cfg.b_star = opt(raw.bstar);
  cfg.c_star = opt(raw.cstar);
  cfg.b_hat = opt(raw.bhat);
  cfg.b_prime = opt(raw.bprime);
  cfg.c_prime = opt(raw.cprime);
  try {
    if (!raw.seed.empty()) {
      cfg.seed = parse_seed(raw.seed, "--seed");
    } else if (const char* env = std::getenv("UDYN_SEED"); env != nullptr && *env != '\0') {
      cfg.seed = parse_seed(env, "UDYN_SEED");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return std::nullopt;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "fixed-points") return cmd_fixed_points(cfg, out);
    if (cfg.command == "orbit") return cmd_orbit(cfg, out);
    if (cfg.command == "radius-orbit") return cmd_radius_orbit(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "grid") return cmd_grid(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::DegenerateParams ? kDegenerate : kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const auto code = parse(argc, argv, cfg, out, err)) return *code;
  return run(cfg, out, err);
}

}  // namespace udyn::cli
