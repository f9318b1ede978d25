#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "udyn/limit.hpp"
#include "udyn/map.hpp"
#include "udyn/oracle.hpp"
#include "udyn/params.hpp"
#include "udyn/portrait.hpp"

namespace udyn {

using Json = nlohmann::ordered_json;

/// Version of every document below; bumped on incompatible field changes.
inline constexpr int kSchemaVersion = 1;

Json params_json(const MapParams& params);
Json region_claim_json(const RegionClaim& claim, long p);
Json fixed_point_json(const FixedPointInfo& info, long p);

/// {"schema": 1, "portrait": {...}}
Json portrait_json(const PhasePortrait& portrait);
/// {"schema": 1, "verification": {...}}
Json report_json(const VerificationReport& report);
Json fixed_points_json(const MapParams& params, const std::array<FixedPointInfo, 3>& fps);
Json orbit_json(const MapParams& params, const OrbitRecord& rec);
Json radius_orbit_json(const RadiusMapSpec& spec, const Radius& start, const RadiusOrbitResult& orbit,
                       const LimitResult& limit);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace udyn
