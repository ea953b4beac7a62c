#pragma once

#include "keconvex/ma1d.hpp"

#include <string>
#include <vector>

namespace keconvex {

/// Radial profile f(tau) on a uniform grid over [-T, 0], with slope samples.
struct RadialProfile {
  std::vector<double> tau;
  std::vector<double> f;
  std::vector<double> fp;
};

double eval_profile(const RadialProfile& p, double tau);
double eval_profile_slope(const RadialProfile& p, double tau);

/// Regularized Green profile F_t(tau) = log(e^{-2t} + e^tau) - C_t,
/// C_t = log(e^{-2t} + 1); F_t(0) = 0, F_t -> tau pointwise as t -> inf.
double green_reg(double t, double tau);
double green_reg_slope(double t, double tau);

/// Radial density of the reference measure nu_n: e^{n tau}/(n-1)!.
double nu_density(int n, double tau);

/// Radial Monge-Ampere density of f: d(f'(tau)^n)/dtau. Total mass f'(0)^n.
std::vector<double> radial_ma_density(const RadialProfile& f, int n);
double radial_ma_mass(const RadialProfile& f, int n);

/// Moser-Trudinger functional
///   (1/gamma) log Int e^{-gamma f} dnu_n + (1/(n+1)) Int f d(f'^n)
/// on [-T, 0] by composite-Simpson quadrature with analytic tail bounds.
double mt_functional(const RadialProfile& f, double gamma, int n);

/// Same functional evaluated on the analytic profile F_t.
double mt_functional_green_reg(double t, double gamma, int n, double T = 60.0);

/// log Int e^{-n F_t} dnu_n, which diverges linearly in t.
double green_nonintegrability(int n, double t, double T = 60.0);

struct SlopeReport {
  double slope = 0.0;
  double predicted = 0.0;  // 2(1 - n/gamma - 1/(n+1))
  double rel_err = 0.0;
  std::string verdict;     // "subcritical" | "critical" | "supercritical"
  std::vector<double> t_grid;
  std::vector<double> values;
};

/// Least-squares slope of t -> G_gamma(F_t), fit on the upper half of the
/// t-range to suppress O(1) terms.
SlopeReport criticality_slope(int n, double gamma, double t_min, double t_max,
                              int samples);

/// Solves the radial mean-field equation
///   n! f'^{n-1} f'' = c e^{-gamma f + n tau},  f(0)=0, f'(-inf)=0, f'(0)=1
/// in the c = 1 gauge using the shift symmetry. Throws NoSolution with a
/// slope-cap certificate (sup f' = (n+1)/gamma < 1) when no profile reaches
/// unit mass; NoConvergence on budget exhaustion.
RadialProfile radial_meanfield_solve(int n, double gamma, const SolveConfig& cfg);

/// Certificate-carrying variant used by reports and tests.
struct MeanfieldOutcome {
  bool solved = false;
  RadialProfile profile;   // valid when solved
  double slope_cap = 0.0;  // sup f' attained when not solved
  double cap_predicted = 0.0;  // (n+1)/gamma
};

MeanfieldOutcome radial_meanfield_try(int n, double gamma, const SolveConfig& cfg);

struct GreenLimitReport {
  std::vector<double> gammas;
  std::vector<double> deviations;  // sup_tau |f_gamma(tau) - tau|
  bool monotone_decreasing = false;
};

/// Runs the radial solver along an increasing gamma sequence below n+1 and
/// reports sup|f_gamma - tau| with a monotone-decrease verdict.
GreenLimitReport green_limit_check(int n, const std::vector<double>& gammas,
                                   const SolveConfig& cfg);

}  // namespace keconvex
