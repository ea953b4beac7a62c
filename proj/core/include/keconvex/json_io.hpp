#pragma once

#include "keconvex/fano.hpp"
#include "keconvex/lie.hpp"
#include "keconvex/polytope.hpp"

#include <json.hpp>

#include <string>

namespace keconvex {

/// Polytope JSON: {"dim": n, "hrep": [{"normal": [int,...], "offset": "p/q"},
/// ...]} or {"dim": n, "vrep": [["p/q", ...], ...]}. Rationals are strings
/// "p/q" or "p"; round-trips are exact.
Polytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_file(const std::string& path);

nlohmann::json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const nlohmann::json& j);

nlohmann::json fano_verdict_to_json(const FanoVerdict& v);
nlohmann::json horo_report_to_json(const HoroReport& r);
nlohmann::json snow_report_to_json(const SnowReport& r);

}  // namespace keconvex
