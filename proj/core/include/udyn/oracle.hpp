#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udyn/map.hpp"
#include "udyn/params.hpp"
#include "udyn/point.hpp"
#include "udyn/portrait.hpp"
#include "udyn/radius.hpp"
#include "udyn/radius_map.hpp"

namespace udyn {

enum class Status { Pass, Fail, Flagged, Inconclusive };
std::string_view to_string(Status s);

struct CheckEntry {
  std::string name;
  std::string tag;
  std::int64_t samples = 0;
  Status status = Status::Inconclusive;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct VerifyOptions {
  std::int64_t samples = 20;
  std::int64_t horizon = 25;
  std::uint64_t seed = 0;
  /// Basin and escape thresholds are p^-threshold and p^threshold.
  std::int64_t threshold = 20;
  OrbitOptions orbit;
};

struct VerificationReport {
  MapParams params;
  std::string leaf;
  std::uint64_t seed = 0;
  std::int64_t horizon = 0;
  std::int64_t samples = 0;
  std::vector<CheckEntry> checks;
  std::vector<std::string> flags;

  bool has_failure() const;
  std::int64_t count(Status s) const;
};

/// b*(x) or c*(x): |a|·|b or c|·|x+b|^2/|x+c|^2 for x on S_|b|(0) or S_|c|(0).
Radius critical_value_at(const Point& x, const MapParams& params, Sphere which);

/// All valuations in [vmin - 3, vmax + 3] on the ½ℤ grid, where vmin, vmax span
/// the valuations of |b|, |c|, |b|·sqrt|a| and |c|/sqrt|a|. Largest radius first.
std::vector<Radius> probe_radii(const RadiusMapSpec& spec);

/// Radii of probe_radii that points of the parameter domain can have.
std::vector<Radius> representable_probe_radii(const MapParams& params);

/// Point valuations against the radius map fed with point-level critical values.
CheckEntry check_lemma1(const MapParams& params, std::int64_t sample_count, std::int64_t horizon,
                        std::uint64_t seed, const OrbitOptions& orbit_opts = {});

/// One entry per region claim of the portrait.
std::vector<CheckEntry> check_portrait(const MapParams& params, const PhasePortrait& portrait,
                                       std::int64_t sample_count, std::int64_t horizon, std::uint64_t seed,
                                       std::int64_t threshold = 20, const OrbitOptions& orbit_opts = {});

/// Exact fixed-point checks, one entry per statement.
std::vector<CheckEntry> check_fixed_points(const MapParams& params, const PhasePortrait& portrait,
                                           std::int64_t sample_count = 20, std::uint64_t seed = 0);

/// Cross-checks limit_classify on each grid spec; fix sets and Λ get their own entries.
std::vector<CheckEntry> check_radius_lemmas(const std::vector<RadiusMapSpec>& spec_grid,
                                            const std::vector<Radius>& probe, std::int64_t horizon);

/// The spec of params with every admissible configuration of critical values
/// drawn from the probe grid, plus the unconfigured spec.
std::vector<RadiusMapSpec> critical_value_grid(const RadiusMapSpec& spec);

VerificationReport verify(const MapParams& params, const VerifyOptions& opts = {});

}  // namespace udyn
