#include "keconvex/meanfield.hpp"

#include "keconvex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

namespace keconvex {

namespace {

double log_add_exp(double a, double b) {
  double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

double factorial_d(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Composite Simpson over [a, b] with an odd number of nodes.
double simpson(const std::function<double(double)>& f, double a, double b, int nodes) {
  if (nodes % 2 == 0) ++nodes;
  double h = (b - a) / (nodes - 1);
  double s = f(a) + f(b);
  for (int i = 1; i + 1 < nodes; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3;
}

}  // namespace

double eval_profile(const RadialProfile& p, double tau) {
  const auto& g = p.tau;
  if (tau <= g.front()) return p.f.front() + p.fp.front() * (tau - g.front());
  if (tau >= g.back()) return p.f.back() + p.fp.back() * (tau - g.back());
  double h = g[1] - g[0];
  std::size_t i = std::min(g.size() - 2, static_cast<std::size_t>((tau - g.front()) / h));
  double t = (tau - g[i]) / (g[i + 1] - g[i]);
  return (1 - t) * p.f[i] + t * p.f[i + 1];
}

double eval_profile_slope(const RadialProfile& p, double tau) {
  const auto& g = p.tau;
  if (tau <= g.front()) return p.fp.front();
  if (tau >= g.back()) return p.fp.back();
  double h = g[1] - g[0];
  std::size_t i = std::min(g.size() - 2, static_cast<std::size_t>((tau - g.front()) / h));
  double t = (tau - g[i]) / (g[i + 1] - g[i]);
  return (1 - t) * p.fp[i] + t * p.fp[i + 1];
}

double green_reg(double t, double tau) {
  return log_add_exp(-2 * t, tau) - log_add_exp(-2 * t, 0.0);
}

double green_reg_slope(double t, double tau) { return logistic(tau + 2 * t); }

double nu_density(int n, double tau) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  return std::exp(n * tau) / factorial_d(n - 1);
}

std::vector<double> radial_ma_density(const RadialProfile& f, int n) {
  const std::size_t m = f.tau.size();
  std::vector<double> out(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (f.fp[i] < -1e-12) throw NonConvexProfile("profile slope is negative");
    std::size_t lo = i > 0 ? i - 1 : 0;
    std::size_t hi = i + 1 < m ? i + 1 : m - 1;
    double num = std::pow(f.fp[hi], n) - std::pow(f.fp[lo], n);
    double den = f.tau[hi] - f.tau[lo];
    if (num < -1e-10) throw NonConvexProfile("d(f'^n)/dtau is negative");
    out[i] = num / den;
  }
  return out;
}

double radial_ma_mass(const RadialProfile& f, int n) {
  return std::pow(f.fp.back(), n);
}

double mt_functional(const RadialProfile& f, double gamma, int n) {
  if (gamma <= 0) throw InvalidParameter("gamma must be positive");
  const std::size_t m = f.tau.size();
  // Fidelity term by trapezoid on the profile grid plus the analytic tail
  // below the grid, where f is essentially constant.
  double i1 = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double a = std::exp(-gamma * f.f[i]) * nu_density(n, f.tau[i]);
    double b = std::exp(-gamma * f.f[i + 1]) * nu_density(n, f.tau[i + 1]);
    i1 += (a + b) / 2 * (f.tau[i + 1] - f.tau[i]);
  }
  i1 += std::exp(-gamma * f.f.front()) * nu_density(n, f.tau.front()) / n;
  if (!(i1 > 0) || !std::isfinite(i1))
    throw QuadratureFailure("fidelity integral is not finite");
  // Energy term as a Stieltjes sum against d(f'^n).
  double energy = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double fm = (f.f[i] + f.f[i + 1]) / 2;
    energy += fm * (std::pow(f.fp[i + 1], n) - std::pow(f.fp[i], n));
  }
  return std::log(i1) / gamma + energy / (n + 1);
}

double mt_functional_green_reg(double t, double gamma, int n, double T) {
  if (gamma <= 0) throw InvalidParameter("gamma must be positive");
  const int nodes = 24001;
  double i1 = simpson(
      [&](double tau) { return std::exp(-gamma * green_reg(t, tau)) * nu_density(n, tau); },
      -T, 0.0, nodes);
  // Tail below -T: F_t is constant there to machine precision, so the tail
  // integrates the nu density alone.
  double tail = std::exp(-gamma * green_reg(t, -T)) * nu_density(n, -T) / n;
  i1 += tail;
  if (tail > 1e-9 * i1)
    throw QuadratureFailure("truncation tail exceeds the quadrature budget");
  double energy = simpson(
      [&](double tau) {
        double sig = green_reg_slope(t, tau);
        double d2 = sig * (1 - sig);
        return green_reg(t, tau) * n * std::pow(sig, n - 1) * d2;
      },
      -T, 0.0, nodes);
  return std::log(i1) / gamma + energy / (n + 1);
}

double green_nonintegrability(int n, double t, double T) {
  double i1 = simpson(
      [&](double tau) { return std::exp(-n * green_reg(t, tau)) * nu_density(n, tau); },
      -T, 0.0, 24001);
  i1 += std::exp(-n * green_reg(t, -T)) * nu_density(n, -T) / n;
  return std::log(i1);
}

SlopeReport criticality_slope(int n, double gamma, double t_min, double t_max,
                              int samples) {
  if (!(t_max > t_min && t_min > 0)) throw InvalidParameter("need t_max > t_min > 0");
  if (samples < 4) throw InvalidParameter("need at least 4 samples");
  SlopeReport rep;
  rep.predicted = 2.0 * (1.0 - static_cast<double>(n) / gamma - 1.0 / (n + 1));
  double T = std::max(60.0, 4 * t_max);
  for (int k = 0; k < samples; ++k) {
    double t = t_min + (t_max - t_min) * k / (samples - 1);
    rep.t_grid.push_back(t);
    rep.values.push_back(mt_functional_green_reg(t, gamma, n, T));
  }
  // Fit on the upper half of the range to suppress O(1) offsets.
  double mid = (t_min + t_max) / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int k = 0; k < samples; ++k) {
    if (rep.t_grid[k] < mid - 1e-12) continue;
    ++m;
    sx += rep.t_grid[k];
    sy += rep.values[k];
    sxx += rep.t_grid[k] * rep.t_grid[k];
    sxy += rep.t_grid[k] * rep.values[k];
  }
  rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  rep.rel_err = rep.predicted != 0
                    ? std::abs(rep.slope - rep.predicted) / std::abs(rep.predicted)
                    : std::abs(rep.slope);
  double crit = n + 1;
  if (std::abs(gamma - crit) < 1e-9)
    rep.verdict = "critical";
  else
    rep.verdict = gamma > crit ? "supercritical" : "subcritical";
  return rep;
}

namespace {

/// First-pass integration of f' = m^{1/n}, m' = (n/n!) e^{-gamma f + n tau}
/// from the asymptotic seed at tau0, recorded densely for Hermite lookups.
struct RawTrajectory {
  double tau0 = 0, h = 0;
  std::vector<double> f, m;

  double f_at(double tau) const {
    double s = (tau - tau0) / h;
    std::size_t i = std::min(f.size() - 2, static_cast<std::size_t>(std::max(0.0, s)));
    double t = s - i;
    // Cubic Hermite using f' = m^{1/n} at the interval ends.
    return hermite(f[i], f[i + 1], fp(i), fp(i + 1), t);
  }
  double fp_at(double tau) const {
    double s = (tau - tau0) / h;
    std::size_t i = std::min(m.size() - 2, static_cast<std::size_t>(std::max(0.0, s)));
    double t = s - i;
    return (1 - t) * fp(i) + t * fp(i + 1);
  }
  double fp(std::size_t i) const { return m[i] > 0 ? std::pow(m[i], 1.0 / n_) : 0.0; }
  double hermite(double f0, double f1, double d0, double d1, double t) const {
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 +
           (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1;
  }
  int n_ = 1;
};

}  // namespace

MeanfieldOutcome radial_meanfield_try(int n, double gamma, const SolveConfig& cfg) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  if (gamma < 0) throw InvalidParameter("gamma must be >= 0");
  const double tau0 = -50.0;
  const double tau_end = 120.0;
  const double h = cfg.h > 0 ? cfg.h : 1e-3;
  const double nf = factorial_d(n);

  RawTrajectory tr;
  tr.tau0 = tau0;
  tr.h = h;
  tr.n_ = n;
  double f = 0.0;
  double m = std::exp(n * tau0) / nf;  // asymptotic seed of the c=1 gauge
  auto rhs_m = [&](double tau, double fv) {
    return (n / nf) * std::exp(-gamma * fv + n * tau);
  };
  auto rhs_f = [&](double mv) { return mv > 0 ? std::pow(mv, 1.0 / n) : 0.0; };
  tr.f.push_back(f);
  tr.m.push_back(m);
  double tau = tau0;
  double tau_star = 0;
  bool crossed = false;
  double sup_fp = rhs_f(m);
  const int steps = static_cast<int>(std::lround((tau_end - tau0) / h));
  for (int k = 0; k < steps; ++k) {
    double k1f = rhs_f(m), k1m = rhs_m(tau, f);
    double k2f = rhs_f(m + h / 2 * k1m), k2m = rhs_m(tau + h / 2, f + h / 2 * k1f);
    double k3f = rhs_f(m + h / 2 * k2m), k3m = rhs_m(tau + h / 2, f + h / 2 * k2f);
    double k4f = rhs_f(m + h * k3m), k4m = rhs_m(tau + h, f + h * k3f);
    double fn = f + h / 6 * (k1f + 2 * k2f + 2 * k3f + k4f);
    double mn = m + h / 6 * (k1m + 2 * k2m + 2 * k3m + k4m);
    tau += h;
    tr.f.push_back(fn);
    tr.m.push_back(mn);
    sup_fp = std::max(sup_fp, rhs_f(mn));
    if (!crossed && mn >= 1.0) {
      crossed = true;
      // Locate the unit-mass crossing inside the last step by bisection on
      // the Hermite interpolant of m (monotone increasing).
      double lo = tau - h, hi = tau;
      double m0 = m, m1 = mn;
      double d0 = rhs_m(tau - h, f), d1 = rhs_m(tau, fn);
      for (int b = 0; b < 80; ++b) {
        double mid = (lo + hi) / 2;
        double t = (mid - (tau - h)) / h;
        double t2 = t * t, t3 = t2 * t;
        double mv = (2 * t3 - 3 * t2 + 1) * m0 + (t3 - 2 * t2 + t) * h * d0 +
                    (-2 * t3 + 3 * t2) * m1 + (t3 - t2) * h * d1;
        (mv < 1.0 ? lo : hi) = mid;
      }
      tau_star = (lo + hi) / 2;
    }
    f = fn;
    m = mn;
    if (crossed && tau > tau_star + 1.0) break;  // margin for interpolation
  }

  MeanfieldOutcome out;
  out.cap_predicted = gamma > 0 ? (n + 1) / gamma : std::numeric_limits<double>::infinity();
  if (!crossed) {
    out.solved = false;
    out.slope_cap = sup_fp;
    return out;
  }
  const double T = cfg.R > 0 ? cfg.R : 40.0;
  const double h_out = 0.01;
  const int m_out = static_cast<int>(std::lround(T / h_out));
  double f_star = tr.f_at(tau_star);
  RadialProfile prof;
  for (int j = 0; j <= m_out; ++j) {
    double t = -T + j * h_out;
    prof.tau.push_back(t);
    double src = tau_star + t;
    if (src <= tau0) {
      prof.f.push_back(-f_star);
      prof.fp.push_back(0.0);
    } else {
      prof.f.push_back(tr.f_at(src) - f_star);
      prof.fp.push_back(tr.fp_at(src));
    }
  }
  out.solved = true;
  out.profile = std::move(prof);
  out.slope_cap = 1.0;
  return out;
}

RadialProfile radial_meanfield_solve(int n, double gamma, const SolveConfig& cfg) {
  MeanfieldOutcome out = radial_meanfield_try(n, gamma, cfg);
  if (!out.solved) {
    std::ostringstream msg;
    msg << "unit Monge-Ampere mass is unreachable: sup f' plateaus at "
        << out.slope_cap << " (theory: (n+1)/gamma = " << out.cap_predicted
        << " < 1)";
    throw NoSolution(msg.str());
  }
  return out.profile;
}

GreenLimitReport green_limit_check(int n, const std::vector<double>& gammas,
                                   const SolveConfig& cfg) {
  GreenLimitReport rep;
  const double window = 5.0;  // compact window [-window, 0] for deviations
  for (double g : gammas) {
    RadialProfile prof = radial_meanfield_solve(n, g, cfg);
    double dev = 0;
    for (std::size_t i = 0; i < prof.tau.size(); ++i) {
      if (prof.tau[i] < -window) continue;
      dev = std::max(dev, std::abs(prof.f[i] - prof.tau[i]));
    }
    rep.gammas.push_back(g);
    rep.deviations.push_back(dev);
  }
  rep.monotone_decreasing = true;
  for (std::size_t i = 1; i < rep.deviations.size(); ++i)
    if (rep.deviations[i] >= rep.deviations[i - 1]) rep.monotone_decreasing = false;
  if (rep.deviations.size() < 2) rep.monotone_decreasing = false;
  return rep;
}

}  // namespace keconvex
