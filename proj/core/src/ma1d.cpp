#include "keconvex/ma1d.hpp"

#include "keconvex/errors.hpp"
#include "keconvex/lie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace keconvex {

namespace {

double safe_exp(double x) { return x > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(x); }

struct OdeState {
  double phi;
  double dphi;
};

/// One RK4 step of phi'' = e^{-phi + p0 x}.
OdeState rk4_step(const OdeState& s, double x, double h, double p0) {
  auto f = [p0](double x_, const OdeState& u) {
    return OdeState{u.dphi, safe_exp(-u.phi + p0 * x_)};
  };
  OdeState k1 = f(x, s);
  OdeState k2 = f(x + h / 2, {s.phi + h / 2 * k1.phi, s.dphi + h / 2 * k1.dphi});
  OdeState k3 = f(x + h / 2, {s.phi + h / 2 * k2.phi, s.dphi + h / 2 * k2.dphi});
  OdeState k4 = f(x + h, {s.phi + h * k3.phi, s.dphi + h * k3.dphi});
  return OdeState{s.phi + h / 6 * (k1.phi + 2 * k2.phi + 2 * k3.phi + k4.phi),
                  s.dphi + h / 6 * (k1.dphi + 2 * k2.dphi + 2 * k3.dphi + k4.dphi)};
}

/// Asymptotic boundary slope at the left end: phi' = a + E/k + E^2/(2k^3),
/// E = e^{-phi - p0 R}, k = p0 - a (second-order tail expansion).
double left_slope(double phi_left, double a, double p0, double R) {
  double k = p0 - a;
  double E = safe_exp(-phi_left - p0 * R);
  return a + E / k + E * E / (2 * k * k * k);
}

double right_slope_target(double phi_right, double b, double p0, double R) {
  double k = b - p0;
  double E = safe_exp(-phi_right + p0 * R);
  return b - E / k - E * E / (2 * k * k * k);
}

struct ShotResult {
  bool blew_up = false;
  std::vector<double> phi;   // samples at every grid node
  std::vector<double> dphi;
  double defect = 0.0;       // phi'(0) - p0 (centering condition)
  double robin_right = 0.0;  // phi'(R) - right asymptotic slope
};

ShotResult shoot(double s0, double a, double b, double p0, double R, int steps) {
  ShotResult out;
  const double h = 2 * R / steps;
  OdeState st{s0, left_slope(s0, a, p0, R)};
  out.phi.reserve(steps + 1);
  out.dphi.reserve(steps + 1);
  out.phi.push_back(st.phi);
  out.dphi.push_back(st.dphi);
  for (int i = 0; i < steps; ++i) {
    double x = -R + i * h;
    st = rk4_step(st, x, h, p0);
    if (!std::isfinite(st.phi) || !std::isfinite(st.dphi) || st.dphi > 1e6) {
      out.blew_up = true;
      out.defect = std::numeric_limits<double>::infinity();
      return out;
    }
    out.phi.push_back(st.phi);
    out.dphi.push_back(st.dphi);
  }
  // The translate family phi(x - x0) is a soft mode of the two asymptotic
  // slope conditions (the equation is autonomous after the p0 gauge shift),
  // so shooting pins the symmetric normalization phi'(0) = p0 instead.
  out.defect = out.dphi[steps / 2] - p0;
  out.robin_right = st.dphi - right_slope_target(st.phi, b, p0, R);
  return out;
}

}  // namespace

double eval_potential(const Potential1D& phi, double x) {
  const auto& g = phi.grid;
  if (x <= g.front()) return phi.values.front() + phi.dleft * (x - g.front());
  if (x >= g.back()) return phi.values.back() + phi.dright * (x - g.back());
  double h = g[1] - g[0];
  std::size_t i = std::min(g.size() - 2, static_cast<std::size_t>((x - g.front()) / h));
  double t = (x - g[i]) / (g[i + 1] - g[i]);
  return (1 - t) * phi.values[i] + t * phi.values[i + 1];
}

double eval_derivative(const Potential1D& phi, double x) {
  const auto& g = phi.grid;
  if (x <= g.front()) return phi.dleft;
  if (x >= g.back()) return phi.dright;
  double h = g[1] - g[0];
  std::size_t i = std::min(g.size() - 2, static_cast<std::size_t>((x - g.front()) / h));
  return (phi.values[i + 1] - phi.values[i]) / (g[i + 1] - g[i]);
}

Potential1D solve_ma_1d(double a, double b, double p0, const SolveConfig& cfg) {
  if (!(a < b)) throw InvalidParameter("interval must satisfy a < b");
  if (!(a < p0 && p0 < b)) throw InvalidParameter("p0 must lie strictly inside (a, b)");
  const double R = cfg.R > 0 ? cfg.R : 10.0;
  const double h = cfg.h > 0 ? cfg.h : 1.0 / 1024;
  const int steps = std::max(16, static_cast<int>(std::lround(2 * R / h)));

  // Bisection on s = phi(-R): the shot defect phi'(R) - target decreases in
  // s (larger s means smaller right-hand side and less curvature mass).
  double lo = -30.0, hi = 5 * R * (b - a) + 50.0;
  ShotResult shot_lo = shoot(lo, a, b, p0, R, steps);
  ShotResult shot_hi = shoot(hi, a, b, p0, R, steps);
  int widen = 0;
  while (shot_lo.defect < 0 && widen++ < 8) {
    lo -= 30;
    shot_lo = shoot(lo, a, b, p0, R, steps);
  }
  if (!(shot_lo.defect > 0 && shot_hi.defect < 0))
    throw NonBarycenterDivergence(
        "shooting defect does not change sign; no finite-box solution found");
  ShotResult best;
  for (int it = 0; it < cfg.max_iter + 200; ++it) {
    double mid = (lo + hi) / 2;
    best = shoot(mid, a, b, p0, R, steps);
    if (best.defect > 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(lo))) break;
  }

  Potential1D out;
  out.grid.resize(best.phi.size());
  for (std::size_t i = 0; i < out.grid.size(); ++i)
    out.grid[i] = -R + i * (2 * R / steps);
  out.values = best.phi;
  out.dleft = best.dphi.front();
  out.dright = best.dphi.back();

  // Gradient-moment defect: for a genuine entire solution the density-
  // weighted mean slope equals p0 (integration by parts); a finite-box
  // artifact with p0 off the barycenter leaves an O(1) boundary flux.
  double mass = 0.0, moment = 0.0;
  for (int i = 0; i <= steps; ++i) {
    double x = out.grid[i];
    double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    double r = safe_exp(-best.phi[i] + p0 * x);
    mass += w * r;
    moment += w * best.dphi[i] * r;
  }
  double defect = moment / mass - p0;
  double boundary_flux = safe_exp(-best.phi.front() - p0 * R) +
                         safe_exp(-best.phi.back() + p0 * R);
  if (std::abs(defect) > 1e-3 || boundary_flux > 1e-2 ||
      std::abs(best.robin_right) > 1e-2) {
    std::ostringstream msg;
    msg << "gradient-moment defect " << defect << ", boundary flux "
        << boundary_flux << ", asymptotic slope mismatch " << best.robin_right
        << ": p0 is not the barycenter of the interval";
    throw NonBarycenterDivergence(msg.str());
  }
  return out;
}

PushforwardReport verify_pushforward(const Potential1D& phi, const Polytope& p,
                                     const RatVec& p0) {
  if (p.dim() != 1) throw InvalidParameter("expected a 1-D polytope");
  double a = static_cast<double>(p.v().vertices.front()[0]);
  double b = static_cast<double>(p.v().vertices.back()[0]);
  if (a > b) std::swap(a, b);
  double p0d = static_cast<double>(p0[0]);

  PushforwardReport rep;
  const auto& g = phi.grid;
  const std::size_t m = g.size();
  double h = g[1] - g[0];
  // Composite Simpson over the box with the equation's right-hand side as
  // the density: q(phi'(x)) e^{-phi + p0 x} dx for q in {1, p, p^2}.
  double s0 = 0, s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double w;
    if (i == 0 || i + 1 == m)
      w = 1.0;
    else
      w = (i % 2 == 1) ? 4.0 : 2.0;
    double x = g[i];
    double slope = (i == 0) ? phi.dleft
                            : (i + 1 == m ? phi.dright
                                          : (phi.values[i + 1] - phi.values[i - 1]) / (2 * h));
    double r = std::exp(-phi.values[i] + p0d * x);
    s0 += w * r;
    s1 += w * slope * r;
    s2 += w * slope * slope * r;
  }
  s0 *= h / 3;
  s1 *= h / 3;
  s2 *= h / 3;
  // Analytic tail completion from the boundary slopes: beyond the box the
  // pushforward fills [a, phi'(-R)] and [phi'(R), b] with Lebesgue measure.
  double dl = phi.dleft, dr = phi.dright;
  auto seg0 = [](double u, double v) { return v - u; };
  auto seg1 = [](double u, double v) { return (v * v - u * u) / 2; };
  auto seg2 = [](double u, double v) { return (v * v * v - u * u * u) / 3; };
  s0 += seg0(a, dl) + seg0(dr, b);
  s1 += seg1(a, dl) + seg1(dr, b);
  s2 += seg2(a, dl) + seg2(dr, b);

  rep.mass = s0;
  rep.mass_exact = b - a;  // 1! * Vol(P)
  rep.mass_residual = std::abs(s0 - rep.mass_exact);
  rep.first_moment = {s1 / s0};
  rep.first_exact = {(a + b) / 2};
  rep.first_residual = std::abs(rep.first_moment[0] - rep.first_exact[0]);
  rep.second_moment = {s2 / s0};
  rep.second_exact = {(b * b * b - a * a * a) / (3 * (b - a))};
  rep.second_residual = std::abs(rep.second_moment[0] - rep.second_exact[0]);
  return rep;
}

PrekopaReport prekopa_property_check(const std::vector<double>& grid,
                                     const std::vector<double>& phi0,
                                     const std::vector<double>& phi1,
                                     int samples, double tolerance) {
  if (grid.size() != phi0.size() || grid.size() != phi1.size() || grid.size() < 3)
    throw InvalidParameter("grid and potential arrays must have equal length >= 3");
  if (samples < 3) throw InvalidParameter("need at least 3 t-samples");
  PrekopaReport rep;
  const double h = grid[1] - grid[0];
  for (int k = 0; k < samples; ++k) {
    double t = static_cast<double>(k) / (samples - 1);
    double integral = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double w = (i == 0 || i + 1 == grid.size()) ? 0.5 : 1.0;
      integral += w * std::exp(-((1 - t) * phi0[i] + t * phi1[i]));
    }
    rep.t_grid.push_back(t);
    rep.F.push_back(-std::log(integral * h));
  }
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 2; j < samples; j += 2) {
      int mid = (i + j) / 2;
      double defect = (rep.F[i] + rep.F[j]) / 2 - rep.F[mid];
      ++rep.pairs_checked;
      rep.max_violation = std::max(rep.max_violation, defect);
      if (defect > tolerance) ++rep.violations;
    }
  }
  return rep;
}

}  // namespace keconvex
