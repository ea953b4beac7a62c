#include "keconvex/json_io.hpp"

#include "keconvex/errors.hpp"

#include <fstream>

namespace keconvex {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("rational must be an integer or a 'p/q' string");
}

}  // namespace

RatVec rat_vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json rat_vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polytope JSON must be an object");
  if (!j.contains("dim")) throw ParseError("polytope JSON needs a 'dim' field");
  int dim = j.at("dim").get<int>();
  if (j.contains("hrep")) {
    std::vector<RawFacet> raw;
    for (const auto& fj : j.at("hrep")) {
      RawFacet f;
      f.normal = rat_vec_from_json(fj.at("normal"));
      if (static_cast<int>(f.normal.size()) != dim)
        throw ParseError("facet normal length does not match 'dim'");
      f.offset = rat_from_json(fj.at("offset"));
      raw.push_back(std::move(f));
    }
    return Polytope::from_hrep([&] {
      HPolytope h = normalize_hrep(raw, dim);
      return h;
    }());
  }
  if (j.contains("vrep")) {
    std::vector<RatVec> pts;
    for (const auto& vj : j.at("vrep")) {
      pts.push_back(rat_vec_from_json(vj));
      if (static_cast<int>(pts.back().size()) != dim)
        throw ParseError("vertex length does not match 'dim'");
    }
    return Polytope::from_vertices(dim, pts);
  }
  throw ParseError("polytope JSON needs 'hrep' or 'vrep'");
}

json polytope_to_json(const Polytope& p) {
  json out;
  out["dim"] = p.dim();
  json hrep = json::array();
  for (const Facet& f : p.h().facets) {
    json fj;
    json normal = json::array();
    for (const Int& x : f.normal) {
      if (x >= -(Int(1) << 53) && x <= (Int(1) << 53))
        normal.push_back(x.convert_to<long long>());
      else
        normal.push_back(x.str());
    }
    fj["normal"] = normal;
    fj["offset"] = rat_to_string(f.offset);
    hrep.push_back(std::move(fj));
  }
  out["hrep"] = hrep;
  json vrep = json::array();
  for (const RatVec& v : p.v().vertices) vrep.push_back(rat_vec_to_json(v));
  out["vrep"] = vrep;
  return out;
}

Polytope polytope_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polytope file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return polytope_from_json(j);
}

json fano_verdict_to_json(const FanoVerdict& v) {
  json out;
  out["volume"] = rat_to_string(v.volume);
  out["degree"] = rat_to_string(v.degree);
  out["bound"] = rat_to_string(v.bound);
  out["status"] = bound_status_name(v.status);
  out["ke_exists"] = v.ke_exists ? json(*v.ke_exists) : json(nullptr);
  if (v.r_max) out["r_max"] = *v.r_max;
  out["notes"] = v.notes;
  return out;
}

json horo_report_to_json(const HoroReport& r) {
  json out;
  out["dh_mass"] = rat_to_string(r.dh_mass);
  out["dh_barycenter"] = rat_vec_to_json(r.dh_barycenter);
  out["root_sum"] = rat_vec_to_json(r.root_sum);
  out["ke_candidate"] = r.ke_candidate;
  out["n"] = r.n;
  out["bound"] = rat_to_string(r.bound);
  out["bound_status"] = bound_status_name(r.bound_status);
  out["is_delzant"] = r.is_delzant;
  out["notes"] = r.notes;
  return out;
}

json snow_report_to_json(const SnowReport& r) {
  json out;
  json cases = json::array();
  for (const SnowCase& c : r.cases) {
    json cj;
    cj["family"] = family_name(c.family);
    cj["rank"] = c.rank;
    cj["S"] = c.S;
    cj["n"] = c.n;
    cj["degree"] = rat_to_string(c.degree);
    cj["bound"] = rat_to_string(c.bound);
    cj["equality"] = c.equality;
    cj["violated"] = c.violated;
    cases.push_back(std::move(cj));
  }
  out["cases"] = cases;
  out["violations"] = r.violations;
  out["equalities"] = r.equalities;
  return out;
}

}  // namespace keconvex
