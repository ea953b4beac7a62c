// Command-line frontend: every check and solver in the library, with
// machine-readable JSON reports. Exit codes: 0 = computation succeeded
// (whatever the mathematical verdict), 2 = input error, 3 = solver
// non-convergence / no solution.

#include <keconvex/errors.hpp>
#include <keconvex/fano.hpp>
#include <keconvex/json_io.hpp>
#include <keconvex/lie.hpp>
#include <keconvex/ma1d.hpp>
#include <keconvex/ma2d.hpp>
#include <keconvex/meanfield.hpp>
#include <keconvex/polytope.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace keconvex;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// FNV-1a 64-bit digest of a file's bytes, for the report input echo.
std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::uint64_t h = 14695981039346656037ull;
  char ch;
  while (in.get(ch)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

/// Accepts "p/q", "p", or a decimal literal (converted exactly).
Rat parse_number(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rat(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac = s.size() - dot - 1;
  Rat denom = 1;
  for (std::size_t i = 0; i < frac; ++i) denom *= 10;
  return parse_rat(digits) / denom;
}

RatVec parse_vector(const std::vector<std::string>& parts) {
  RatVec v;
  for (const auto& s : parts) v.push_back(parse_number(s));
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

json rat_json(const Rat& r) { return rat_to_string(r); }

json rat_vec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_to_string(r));
  return a;
}

json dvec_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

struct Report {
  json command = json::array();
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> verdicts;
  int exit_code = kExitOk;
};

void add_input_file(Report& rep, const std::string& key, const std::string& path) {
  rep.inputs[key] = {{"path", path}, {"digest", file_digest(path)}};
}

void print_report(const Report& rep, bool as_json, double ms) {
  if (as_json) {
    json out;
    out["command"] = rep.command;
    out["version"] = kVersion;
    out["inputs"] = rep.inputs;
    out["results"] = rep.results;
    out["verdicts"] = rep.verdicts;
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::function<void(const std::string&, const json&)> emit =
      [&](const std::string& prefix, const json& j) {
        if (j.is_object()) {
          for (auto it = j.begin(); it != j.end(); ++it)
            emit(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        } else if (j.is_array() && j.size() > 12) {
          std::cout << prefix << ": [" << j.size() << " entries]\n";
        } else if (j.is_number_float()) {
          std::cout << prefix << ": " << fmt17(j.get<double>()) << "\n";
        } else {
          std::cout << prefix << ": " << j.dump() << "\n";
        }
      };
  emit("", rep.results);
  std::string verdicts;
  for (const auto& v : rep.verdicts) verdicts += (verdicts.empty() ? "" : ", ") + v;
  std::cout << "verdict: " << verdicts << "\n";
}

json fano_json(const FanoVerdict& v) {
  json j;
  j["volume"] = rat_json(v.volume);
  j["degree"] = rat_json(v.degree);
  j["bound"] = rat_json(v.bound);
  j["status"] = bound_status_name(v.status);
  if (v.ke_exists) j["ke_exists"] = *v.ke_exists;
  if (v.r_max) j["r_max"] = *v.r_max;
  j["notes"] = v.notes;
  return j;
}

json potential1d_json(const Potential1D& p) {
  return json{{"type", "profile1d"},
              {"grid_min", p.grid.front()},
              {"grid_max", p.grid.back()},
              {"values", dvec_json(p.values)},
              {"dleft", p.dleft},
              {"dright", p.dright}};
}

Potential1D potential1d_from_json(const json& j) {
  Potential1D p;
  double a = j.at("grid_min"), b = j.at("grid_max");
  p.values = j.at("values").get<std::vector<double>>();
  if (p.values.size() < 2) throw ParseError("profile1d needs at least 2 samples");
  p.grid.resize(p.values.size());
  for (std::size_t i = 0; i < p.grid.size(); ++i)
    p.grid[i] = a + (b - a) * static_cast<double>(i) / (p.grid.size() - 1);
  p.dleft = j.at("dleft");
  p.dright = j.at("dright");
  return p;
}

json potential2d_json(const GridPotential& p) {
  return json{{"type", "grid2d"}, {"R", p.R}, {"h", p.h}, {"N", p.N},
              {"c", p.c}, {"values", dvec_json(p.values)}};
}

GridPotential potential2d_from_json(const json& j) {
  GridPotential p;
  p.R = j.at("R");
  p.h = j.at("h");
  p.N = j.at("N");
  p.c = j.at("c");
  p.values = j.at("values").get<std::vector<double>>();
  if (static_cast<int>(p.values.size()) != p.N * p.N)
    throw ParseError("grid2d value count does not match N*N");
  return p;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump() << "\n";
}

struct Options {
  bool as_json = false;
  double tol = 0;
  double grid = 0;
  double R = 0;
  std::uint64_t seed = 12345;
  std::string batch;
};

SolveConfig make_config(const Options& opt) {
  SolveConfig cfg;
  if (opt.tol > 0) cfg.tol = opt.tol;
  if (opt.grid > 0) cfg.h = opt.grid;
  if (opt.R > 0) cfg.R = opt.R;
  return cfg;
}

// ---------------------------------------------------------------------------
// Subcommand handlers. Each fills in rep.results / rep.verdicts.

void run_polytope_info(const std::string& path, Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  auto [vol, bary] = volume_and_barycenter(p);
  json r;
  r["dim"] = p.dim();
  r["num_vertices"] = p.v().vertices.size();
  r["num_facets"] = p.h().facets.size();
  r["volume"] = rat_json(vol);
  r["barycenter"] = rat_vec_json(bary);
  r["lattice"] = is_lattice_polytope(p);
  r["reflexive"] = is_reflexive(p);
  r["delzant"] = is_delzant(p);
  bool zero_inside = p.strictly_contains(RatVec(p.dim(), Rat(0)));
  r["contains_origin"] = zero_inside;
  if (zero_inside)
    r["interior_lattice_points"] = interior_lattice_points(p).size();
  rep.results = r;
  rep.verdicts.push_back("holds");
}

void run_polytope_normalize(const std::string& path, Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  auto [q, map] = affine_normalize(p);
  auto [vol, bary] = volume_and_barycenter(q);
  json r;
  r["polytope"] = polytope_to_json(q);
  json rows = json::array();
  for (const RatVec& row : map.matrix) rows.push_back(rat_vec_json(row));
  r["map"] = {{"matrix", rows},
              {"translation", rat_vec_json(map.translation)},
              {"det_abs", rat_json(map.det_abs)}};
  r["volume"] = rat_json(vol);
  r["barycenter"] = rat_vec_json(bary);
  rep.results = r;
  rep.verdicts.push_back("holds");
}

void run_polytope_dual(const std::string& path, Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  Polytope d = polar_dual(p);
  json r;
  r["polytope"] = polytope_to_json(d);
  r["lattice"] = is_lattice_polytope(d);
  auto [vol, bary] = volume_and_barycenter(d);
  r["volume"] = rat_json(vol);
  r["barycenter"] = rat_vec_json(bary);
  rep.results = r;
  rep.verdicts.push_back("holds");
}

json fano_check_one(const Polytope& p, std::vector<std::string>* verdicts) {
  FanoVerdict v = ehrhart_check(p);
  v.ke_exists = ke_exists_toric(p);
  json r = fano_json(v);
  r["reflexive"] = is_reflexive(p);
  r["delzant"] = is_delzant(p);
  if (verdicts) {
    verdicts->push_back(bound_status_name(v.status));
    verdicts->push_back(*v.ke_exists ? "ke" : "no-ke");
  }
  return r;
}

void run_fano_check(const std::string& path, const Options& opt, Report& rep) {
  if (!opt.batch.empty()) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(opt.batch))
      if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    json arr = json::array();
    for (const auto& f : files) {
      add_input_file(rep, f, f);
      json one = fano_check_one(polytope_from_file(f), nullptr);
      one["file"] = f;
      arr.push_back(one);
    }
    rep.results["batch"] = arr;
    rep.verdicts.push_back("holds");
    return;
  }
  add_input_file(rep, "polytope", path);
  rep.results = fano_check_one(polytope_from_file(path), &rep.verdicts);
}

void run_fano_grunbaum(const std::string& path, const std::string& direction,
                       Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  RatVec dir = parse_vector(split_commas(direction));
  GrunbaumResult g = grunbaum_check(p, dir);
  rep.results = {{"clipped_volume", rat_json(g.clipped_volume)},
                 {"bound", rat_json(g.bound)},
                 {"direction", rat_vec_json(dir)}};
  rep.verdicts.push_back(g.equality ? "equality" : (g.holds ? "holds" : "violated"));
}

void run_fano_ricci(const std::string& path, const std::string& r_str, Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  Rat r = parse_number(r_str);
  FanoVerdict v = ricci_bound_check(p, r);
  rep.results = fano_json(v);
  rep.results["r"] = rat_json(r);
  rep.verdicts.push_back(bound_status_name(v.status));
}

void run_ma_solve1d(double a, double b, const std::string& p0_str,
                    const Options& opt, const std::string& output, Report& rep) {
  double p0 = static_cast<double>(parse_number(p0_str));
  SolveConfig cfg = make_config(opt);
  Potential1D phi = solve_ma_1d(a, b, p0, cfg);
  Polytope seg = Polytope::from_vertices(
      1, {{parse_number(fmt17(a))}, {parse_number(fmt17(b))}});
  PushforwardReport pf = verify_pushforward(phi, seg, {parse_number(p0_str)});
  json r;
  r["interval"] = {a, b};
  r["p0"] = p0;
  r["grid_points"] = phi.grid.size();
  r["dleft"] = phi.dleft;
  r["dright"] = phi.dright;
  r["value_at_0"] = eval_potential(phi, 0.0);
  r["mass"] = pf.mass;
  r["mass_residual"] = pf.mass_residual;
  rep.results = r;
  if (!output.empty()) {
    write_json_file(output, potential1d_json(phi));
    rep.results["output"] = output;
  }
  rep.verdicts.push_back("holds");
}

void run_ma_solve2d(const std::string& path, const std::string& p0_str,
                    const Options& opt, const std::string& output, Report& rep) {
  add_input_file(rep, "polytope", path);
  Polytope p = polytope_from_file(path);
  RatVec p0 = parse_vector(split_commas(p0_str));
  SolveConfig cfg = make_config(opt);
  GridPotential phi = solve_ma_2d(p, p0, cfg);
  PushforwardReport pf = verify_pushforward(phi, p, p0);
  json r;
  r["R"] = phi.R;
  r["h"] = phi.h;
  r["N"] = phi.N;
  r["c"] = phi.c;
  r["mass"] = pf.mass;
  r["mass_exact"] = pf.mass_exact;
  r["mass_residual"] = pf.mass_residual;
  r["interior_residual"] = interior_residual(phi, p0);
  r["min_second_difference"] = min_second_difference(phi);
  rep.results = r;
  if (!output.empty()) {
    write_json_file(output, potential2d_json(phi));
    rep.results["output"] = output;
  }
  rep.verdicts.push_back("holds");
}

void run_ma_verify(const std::string& potential_path, const std::string& poly_path,
                   const std::string& p0_str, double tol, Report& rep) {
  add_input_file(rep, "potential", potential_path);
  add_input_file(rep, "polytope", poly_path);
  std::ifstream in(potential_path);
  json jp;
  try {
    in >> jp;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid potential file: ") + e.what());
  }
  Polytope p = polytope_from_file(poly_path);
  RatVec p0 = parse_vector(split_commas(p0_str));
  PushforwardReport pf;
  std::string type = jp.value("type", "");
  if (type == "profile1d")
    pf = verify_pushforward(potential1d_from_json(jp), p, p0);
  else if (type == "grid2d")
    pf = verify_pushforward(potential2d_from_json(jp), p, p0);
  else
    throw ParseError("potential file must have type profile1d or grid2d");
  json r;
  r["mass"] = pf.mass;
  r["mass_exact"] = pf.mass_exact;
  r["mass_residual"] = pf.mass_residual;
  r["first_moment"] = dvec_json(pf.first_moment);
  r["first_exact"] = dvec_json(pf.first_exact);
  r["first_residual"] = pf.first_residual;
  r["second_moment"] = dvec_json(pf.second_moment);
  r["second_exact"] = dvec_json(pf.second_exact);
  r["second_residual"] = pf.second_residual;
  rep.results = r;
  double t = tol > 0 ? tol : 1e-3;
  rep.verdicts.push_back(pf.first_residual <= t ? "holds" : "violated");
}

void run_meanfield_radial(int n, double gamma, const Options& opt, Report& rep) {
  SolveConfig cfg = make_config(opt);
  MeanfieldOutcome out = radial_meanfield_try(n, gamma, cfg);
  json r;
  r["n"] = n;
  r["gamma"] = gamma;
  if (out.solved) {
    const RadialProfile& f = out.profile;
    r["grid_points"] = f.tau.size();
    r["tau_min"] = f.tau.front();
    r["f_at_tau_min"] = f.f.front();
    r["slope_at_0"] = f.fp.back();
    r["ma_mass"] = radial_ma_mass(f, n);
    r["mt_functional"] = mt_functional(f, gamma, n);
    rep.verdicts.push_back("holds");
  } else {
    r["slope_cap"] = out.slope_cap;
    r["cap_predicted"] = out.cap_predicted;
    r["certificate"] =
        "sup f' = " + fmt17(out.slope_cap) + " <= (n+1)/gamma = " +
        fmt17(out.cap_predicted) + " < 1: unit mass is unreachable";
    rep.verdicts.push_back("no-solution");
    rep.exit_code = kExitNoConvergence;
  }
  rep.results = r;
}

void run_meanfield_greenlimit(int n, const std::string& gammas_str,
                              const Options& opt, Report& rep) {
  std::vector<double> gammas;
  for (const auto& s : split_commas(gammas_str))
    gammas.push_back(static_cast<double>(parse_number(s)));
  GreenLimitReport g = green_limit_check(n, gammas, make_config(opt));
  rep.results = {{"n", n},
                 {"gammas", dvec_json(g.gammas)},
                 {"deviations", dvec_json(g.deviations)},
                 {"monotone_decreasing", g.monotone_decreasing}};
  rep.verdicts.push_back(g.monotone_decreasing ? "holds" : "violated");
}

void run_critical_slope(int n, double gamma, double tmin, double tmax,
                        int samples, Report& rep) {
  SlopeReport s = criticality_slope(n, gamma, tmin, tmax, samples);
  rep.results = {{"n", n},
                 {"gamma", gamma},
                 {"slope", s.slope},
                 {"predicted", s.predicted},
                 {"rel_err", s.rel_err},
                 {"t_grid", dvec_json(s.t_grid)},
                 {"values", dvec_json(s.values)}};
  rep.verdicts.push_back(s.verdict);
}

std::vector<int> parse_parabolic(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& part : split_commas(s)) out.push_back(std::stoi(part) - 1);
  return out;
}

void run_lie_degree(const std::string& family, int rank, const std::string& parabolic,
                    const std::string& lambda_str, Report& rep) {
  RootSystem rs = build_root_system(parse_family(family), rank);
  ParabolicSubset ps = parabolic_subset(rs, parse_parabolic(parabolic));
  RatVec lambda;
  std::string lambda_kind;
  if (lambda_str.empty()) {
    lambda = anticanonical_weight(ps);
    lambda_kind = "anticanonical";
  } else {
    lambda = weight_to_ambient(rs, parse_vector(split_commas(lambda_str)));
    lambda_kind = "fundamental_weights";
  }
  Rat deg = flag_degree(rs, ps, lambda);
  int n = static_cast<int>(ps.r_x_plus.size());
  Rat bound = rat_pow(Rat(n + 1), n);
  rep.results = {{"family", family_name(rs.family)},
                 {"rank", rs.rank},
                 {"n", n},
                 {"lambda_kind", lambda_kind},
                 {"degree", rat_json(deg)},
                 {"bound", rat_json(bound)}};
  rep.verdicts.push_back(deg == bound ? "equality"
                                      : (deg < bound ? "holds" : "violated"));
}

void run_lie_scan(int max_rank, Report& rep) {
  SnowReport s = snow_scan(max_rank);
  rep.results = snow_report_to_json(s);
  rep.verdicts.push_back(s.violations == 0 ? "holds" : "violated");
}

void run_lie_dh(const std::string& family, int rank, const std::string& path,
                Report& rep) {
  add_input_file(rep, "polytope", path);
  RootSystem rs = build_root_system(parse_family(family), rank);
  Polytope p = polytope_from_file(path);
  Rat mass = dh_integrate(rs, p);
  rep.results = {{"family", family_name(rs.family)},
                 {"rank", rs.rank},
                 {"dh_mass", rat_json(mass)},
                 {"volume", rat_json(volume_and_barycenter(p).first)}};
  rep.verdicts.push_back("holds");
}

void run_lie_horo(const std::string& family, int rank, const std::string& path,
                  Report& rep) {
  add_input_file(rep, "polytope", path);
  RootSystem rs = build_root_system(parse_family(family), rank);
  Polytope p = polytope_from_file(path);
  HoroReport h = horospherical_check(rs, p);
  rep.results = horo_report_to_json(h);
  rep.verdicts.push_back(h.ke_candidate ? "ke" : "no-ke");
  rep.verdicts.push_back(bound_status_name(h.bound_status));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-geometric checks and Monge-Ampere solvers for "
               "Kaehler-Einstein existence criteria"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  Options opt;
  app.add_flag("--json", opt.as_json, "emit a JSON report on stdout");
  app.add_option("--tol", opt.tol, "solver / verdict tolerance");
  app.add_option("--grid", opt.grid, "grid spacing h");
  app.add_option("--R", opt.R, "truncation radius");
  app.add_option("--seed", opt.seed, "seed for random corpora");
  app.add_option("--batch", opt.batch, "directory of input files (fano check)");

  std::string poly_path, direction, r_str = "1", p0_str = "0", output;
  std::string potential_path, family = "A", parabolic, lambda_str, gammas_str;
  double gamma = 0, tmin = 5, tmax = 15;
  int n = 2, rank = 2, samples = 11, max_rank = 3;

  auto* c_poly = app.add_subcommand("polytope", "exact polytope computations");
  c_poly->require_subcommand(1);
  auto* c_info = c_poly->add_subcommand("info", "volume, barycenter, classification");
  c_info->add_option("--polytope", poly_path)->required();
  auto* c_norm = c_poly->add_subcommand("normalize", "affine normal form");
  c_norm->add_option("--polytope", poly_path)->required();
  auto* c_dual = c_poly->add_subcommand("dual", "polar dual");
  c_dual->add_option("--polytope", poly_path)->required();

  auto* c_fano = app.add_subcommand("fano", "degree bounds and KE criteria");
  c_fano->require_subcommand(1);
  auto* c_check = c_fano->add_subcommand("check", "degree bound + toric KE test");
  c_check->add_option("--polytope", poly_path);
  auto* c_grun = c_fano->add_subcommand("grunbaum", "barycenter-cut volume bound");
  c_grun->add_option("--polytope", poly_path)->required();
  c_grun->add_option("--direction", direction, "comma-separated rationals")->required();
  auto* c_ricci = c_fano->add_subcommand("ricci", "Ricci lower-bound degree test");
  c_ricci->add_option("--polytope", poly_path)->required();
  c_ricci->add_option("--r", r_str, "Ricci lower bound in (0,1]");

  auto* c_ma = app.add_subcommand("ma", "real Monge-Ampere solvers");
  c_ma->require_subcommand(1);
  auto* c_1d = c_ma->add_subcommand("solve1d", "shooting solver on an interval");
  std::vector<double> interval;
  c_1d->add_option("--interval", interval, "endpoints a b")->expected(2);
  c_1d->add_option("--p0", p0_str, "target barycenter");
  c_1d->add_option("--output", output, "write the solved profile to a file");
  auto* c_2d = c_ma->add_subcommand("solve2d", "monotone grid solver");
  c_2d->add_option("--polytope", poly_path)->required();
  c_2d->add_option("--p0", p0_str, "comma-separated rationals");
  c_2d->add_option("--output", output, "write the solved grid to a file");
  auto* c_ver = c_ma->add_subcommand("verify", "pushforward moment verification");
  c_ver->add_option("--potential", potential_path)->required();
  c_ver->add_option("--polytope", poly_path)->required();
  c_ver->add_option("--p0", p0_str, "comma-separated rationals");

  auto* c_mf = app.add_subcommand("meanfield", "radial mean-field equation");
  c_mf->require_subcommand(1);
  auto* c_rad = c_mf->add_subcommand("radial", "solve the radial profile");
  c_rad->add_option("--n", n);
  c_rad->add_option("--gamma", gamma);
  auto* c_gl = c_mf->add_subcommand("greenlimit", "Green-profile limit deviations");
  c_gl->add_option("--n", n);
  c_gl->add_option("--gammas", gammas_str, "comma-separated list")->required();

  auto* c_crit = app.add_subcommand("critical", "Moser-Trudinger criticality");
  c_crit->require_subcommand(1);
  auto* c_slope = c_crit->add_subcommand("slope", "slope of the functional on Green profiles");
  c_slope->add_option("--n", n);
  c_slope->add_option("--gamma", gamma);
  c_slope->add_option("--tmin", tmin);
  c_slope->add_option("--tmax", tmax);
  c_slope->add_option("--samples", samples);

  auto* c_lie = app.add_subcommand("lie", "root systems and flag degrees");
  c_lie->require_subcommand(1);
  auto* c_deg = c_lie->add_subcommand("degree", "Weyl degree of a flag variety");
  c_deg->add_option("--family", family, "A|B|C|D|G2");
  c_deg->add_option("--rank", rank);
  c_deg->add_option("--parabolic", parabolic, "retained simple roots, 1-based");
  c_deg->add_option("--lambda", lambda_str, "fundamental-weight coordinates");
  auto* c_scan = c_lie->add_subcommand("scan", "degree bound over all parabolics");
  c_scan->add_option("--max-rank", max_rank);
  auto* c_dh = c_lie->add_subcommand("dh", "Duistermaat-Heckman integral");
  c_dh->add_option("--family", family);
  c_dh->add_option("--rank", rank);
  c_dh->add_option("--polytope", poly_path)->required();
  auto* c_horo = c_lie->add_subcommand("horo", "horospherical KE criterion");
  c_horo->add_option("--family", family);
  c_horo->add_option("--rank", rank);
  c_horo->add_option("--polytope", poly_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  Report rep;
  for (int i = 1; i < argc; ++i) rep.command.push_back(argv[i]);
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (c_info->parsed()) run_polytope_info(poly_path, rep);
    else if (c_norm->parsed()) run_polytope_normalize(poly_path, rep);
    else if (c_dual->parsed()) run_polytope_dual(poly_path, rep);
    else if (c_check->parsed()) {
      if (poly_path.empty() && opt.batch.empty())
        throw InvalidParameter("fano check needs --polytope or --batch");
      run_fano_check(poly_path, opt, rep);
    }
    else if (c_grun->parsed()) run_fano_grunbaum(poly_path, direction, rep);
    else if (c_ricci->parsed()) run_fano_ricci(poly_path, r_str, rep);
    else if (c_1d->parsed()) {
      if (interval.size() != 2)
        throw InvalidParameter("--interval expects two endpoints");
      run_ma_solve1d(interval[0], interval[1], p0_str, opt, output, rep);
    }
    else if (c_2d->parsed()) run_ma_solve2d(poly_path, p0_str, opt, output, rep);
    else if (c_ver->parsed())
      run_ma_verify(potential_path, poly_path, p0_str, opt.tol, rep);
    else if (c_rad->parsed()) run_meanfield_radial(n, gamma, opt, rep);
    else if (c_gl->parsed()) run_meanfield_greenlimit(n, gammas_str, opt, rep);
    else if (c_slope->parsed()) run_critical_slope(n, gamma, tmin, tmax, samples, rep);
    else if (c_deg->parsed()) run_lie_degree(family, rank, parabolic, lambda_str, rep);
    else if (c_scan->parsed()) run_lie_scan(max_rank, rep);
    else if (c_dh->parsed()) run_lie_dh(family, rank, poly_path, rep);
    else if (c_horo->parsed()) run_lie_horo(family, rank, poly_path, rep);
  } catch (const NonBarycenterDivergence& e) {
    rep.results["error"] = e.what();
    rep.verdicts.push_back("no-solution");
    rep.exit_code = kExitNoConvergence;
  } catch (const NoSolution& e) {
    rep.results["error"] = e.what();
    rep.verdicts.push_back("no-solution");
    rep.exit_code = kExitNoConvergence;
  } catch (const NoConvergence& e) {
    rep.results["error"] = e.what();
    rep.verdicts.push_back("error");
    rep.exit_code = kExitNoConvergence;
  } catch (const std::exception& e) {
    rep.results["error"] = e.what();
    rep.verdicts.push_back("error");
    rep.exit_code = kExitInput;
  }
  auto t1 = std::chrono::steady_clock::now();
  print_report(rep, opt.as_json,
               std::chrono::duration<double, std::milli>(t1 - t0).count());
  return rep.exit_code;
}
