#include "udyn/serialize.hpp"

#include "udyn/error.hpp"

namespace udyn {

namespace {

Json radius_json(const Radius& r, long p) { return r.to_string(p); }

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json set_json(const ExceptionalSet& s) {
  Json j;
  j["name"] = std::string(s.name());
  j["base_valuation"] = s.base().to_string();
  j["step_valuation"] = s.step().to_string();
  j["element_0"] = s.element(0).to_string(s.p);
  j["element_1"] = s.element(1).to_string(s.p);
  return j;
}

Json region_json(const Region& r, long p) {
  Json j;
  j["kind"] = std::string(r.kind_name());
  j["text"] = r.describe(p);
  switch (r.kind) {
    case Region::Kind::InSet:
    case Region::Kind::NotInSet: j["set"] = std::string(r.set->name()); break;
    case Region::Kind::InLambda:
    case Region::Kind::OutsideLambda:
      j["lo"] = r.lambda->lo.to_string();
      j["hi"] = r.lambda->hi.to_string();
      break;
    default: j["radius"] = radius_json(r.rho, p); break;
  }
  return j;
}

Json verdict_json(const Verdict& v, long p) {
  Json j;
  j["kind"] = v.kind_name();
  j["text"] = v.to_string(p);
  return j;
}

}  // namespace

Json params_json(const MapParams& params) {
  Json j;
  j["p"] = params.p;
  j["a"] = params.a.to_string();
  j["b"] = params.b.to_string();
  j["c"] = params.c.to_string();
  j["regime"] = std::string(to_string(params.regime()));
  j["abs_a"] = radius_json(Radius::from_valuation(params.val_a()), params.p);
  j["abs_b"] = radius_json(Radius::from_valuation(params.val_b()), params.p);
  j["abs_c"] = radius_json(Radius::from_valuation(params.val_c()), params.p);
  j["sqrt_a"] = std::string(to_string(params.sqrt_mode.kind));
  j["precision"] = params.precision;
  j["force_truncated"] = params.force_truncated;
  return j;
}

Json region_claim_json(const RegionClaim& claim, long p) {
  Json j;
  j["tag"] = claim.tag;
  j["effect"] = std::string(to_string(claim.effect));
  j["region"] = region_json(claim.region, p);
  if (claim.effect == Effect::ReachesCritical || claim.effect == Effect::ReturnsToCritical ||
      claim.effect == Effect::Dichotomy) {
    j["sphere"] = std::string(to_string(claim.sphere));
  }
  if (claim.condition) {
    Json c;
    c["sphere"] = std::string(to_string(claim.condition->sphere));
    c["set"] = std::string(claim.condition->set.name());
    c["member"] = claim.condition->member;
    c["text"] = claim.condition->describe();
    j["condition"] = c;
  }
  j["statement"] = claim.statement(p);
  return j;
}

Json fixed_point_json(const FixedPointInfo& info, long p) {
  Json j;
  j["which"] = std::string(to_string(info.which));
  j["location"] = to_string(info.location);
  j["domain"] = domain_name(info.location);
  try {
    j["abs"] = radius_json(Radius::of(point_val(info.location, p)), p);
  } catch (const Error&) {
    j["abs"] = nullptr;
  }
  j["multiplier"] = to_string(info.multiplier);
  j["closed_form_multiplier"] = to_string(info.closed_form_multiplier);
  j["multiplier_abs"] = radius_json(info.multiplier_abs, p);
  j["character"] = std::string(to_string(info.character));
  j["residual_zero"] = info.residual_ok;
  j["multiplier_matches"] = info.multiplier_matches;
  return j;
}

Json portrait_json(const PhasePortrait& pp) {
  const long p = pp.params.p;
  Json body;
  body["theorem"] = std::string(to_string(pp.theorem));
  body["leaf"] = pp.leaf;
  body["params"] = params_json(pp.params);
  auto claims = [&](const std::vector<RegionClaim>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(region_claim_json(c, p));
    return arr;
  };
  body["invariant_spheres"] = claims(pp.invariant_spheres);
  body["basin_of_zero"] = claims(pp.basin_of_zero);
  body["siegel_disk_zero"] = pp.siegel_disk_zero ? region_claim_json(*pp.siegel_disk_zero, p) : Json(nullptr);
  body["escape_claims"] = claims(pp.escape_claims);
  body["orbit_claims"] = claims(pp.orbit_claims);
  Json reports = Json::array();
  for (const auto& r : pp.fixed_point_reports) {
    Json j;
    j["which"] = std::string(to_string(r.which));
    j["info"] = r.info ? fixed_point_json(*r.info, p) : Json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    j["location_tag"] = r.location_tag;
    j["location"] = r.location ? region_json(*r.location, p) : Json(nullptr);
    j["location_agrees"] = opt_bool(r.location_agrees);
    j["character_tag"] = r.character_tag;
    Json adm = Json::array();
    for (const Character c : r.admissible) adm.push_back(std::string(to_string(c)));
    j["admissible_characters"] = adm;
    j["character_agrees"] = opt_bool(r.character_agrees);
    j["expansion_ball"] = r.expansion_ball ? radius_json(*r.expansion_ball, p) : Json(nullptr);
    j["caveat"] = r.caveat;
    reports.push_back(j);
  }
  body["fixed_point_reports"] = reports;
  if (pp.distance) {
    Json d;
    d["tag"] = pp.distance->tag;
    d["stated"] = radius_json(pp.distance->stated, p);
    d["recomputed"] = radius_json(pp.distance->recomputed, p);
    d["observed"] = pp.distance->observed ? radius_json(*pp.distance->observed, p) : Json(nullptr);
    d["agrees"] = pp.distance->agrees();
    body["distance"] = d;
  } else {
    body["distance"] = nullptr;
  }
  body["exceptional_set"] = pp.exceptional_set ? set_json(*pp.exceptional_set) : Json(nullptr);
  body["flags"] = pp.flags;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["portrait"] = body;
  return doc;
}

Json report_json(const VerificationReport& rep) {
  Json body;
  body["params"] = params_json(rep.params);
  body["leaf"] = rep.leaf;
  body["seed"] = rep.seed;
  body["horizon"] = rep.horizon;
  body["samples"] = rep.samples;
  Json checks = Json::array();
  for (const auto& e : rep.checks) {
    Json j;
    j["name"] = e.name;
    j["tag"] = e.tag;
    j["samples"] = e.samples;
    j["status"] = std::string(to_string(e.status));
    j["detail"] = e.detail;
    j["counterexample"] = e.counterexample ? Json(*e.counterexample) : Json(nullptr);
    checks.push_back(j);
  }
  body["checks"] = checks;
  Json summary;
  for (const Status s : {Status::Pass, Status::Fail, Status::Flagged, Status::Inconclusive}) {
    summary[std::string(to_string(s))] = rep.count(s);
  }
  body["summary"] = summary;
  body["flags"] = rep.flags;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["verification"] = body;
  return doc;
}

Json fixed_points_json(const MapParams& params, const std::array<FixedPointInfo, 3>& fps) {
  Json arr = Json::array();
  for (const auto& f : fps) arr.push_back(fixed_point_json(f, params.p));
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = params_json(params);
  doc["fixed_points"] = arr;
  return doc;
}

Json orbit_json(const MapParams& params, const OrbitRecord& rec) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    Json row;
    row["step"] = i;
    row["point"] = to_string(rec.points[i]);
    row["valuation"] = i < rec.valuations.size() ? Json(rec.valuations[i].to_string()) : Json(nullptr);
    rows.push_back(row);
  }
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["params"] = params_json(params);
  doc["orbit"] = rows;
  doc["termination"] = rec.termination_name();
  doc["termination_step"] = rec.step;
  doc["truncated_from"] = rec.truncated_from ? Json(*rec.truncated_from) : Json(nullptr);
  return doc;
}

Json radius_orbit_json(const RadiusMapSpec& spec, const Radius& start, const RadiusOrbitResult& orbit,
                       const LimitResult& limit) {
  const long p = spec.p;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["spec"] = spec.describe();
  doc["start"] = radius_json(start, p);
  Json traj = Json::array();
  for (const Radius& r : orbit.trajectory) traj.push_back(radius_json(r, p));
  doc["trajectory"] = traj;
  doc["verdict"] = verdict_json(orbit.verdict, p);
  Json lim;
  lim["verdict"] = verdict_json(limit.verdict, p);
  lim["item"] = limit.item;
  lim["lemma"] = verdict_json(limit.lemma, p);
  lim["lemma_agrees"] = limit.lemma_agrees;
  doc["limit"] = lim;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace udyn
