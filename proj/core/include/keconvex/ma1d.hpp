#pragma once

#include "keconvex/polytope.hpp"

#include <vector>

namespace keconvex {

/// Shared solver knobs for the Monge-Ampere solvers.
struct SolveConfig {
  double tol = 1e-10;
  int max_iter = 200;
  double R = 10.0;    // truncation half-width
  double h = 0.0;     // mesh size; 0 = solver default
  double damping = 1.0;
};

/// Sampled convex potential on a uniform 1-D grid over [-R, R].
struct Potential1D {
  std::vector<double> grid;
  std::vector<double> values;
  double dleft = 0.0;   // phi'(-R)
  double dright = 0.0;  // phi'(R)
};

double eval_potential(const Potential1D& phi, double x);
double eval_derivative(const Potential1D& phi, double x);

/// Solves phi'' = e^{-phi + p0 x} on [-R, R] with asymptotic slope
/// conditions phi'(-R) -> a, phi'(R) -> b (exponential tail corrections),
/// by shooting on phi(-R). Throws NonBarycenterDivergence when
/// p0 != (a+b)/2, with the gradient-moment defect in the message.
Potential1D solve_ma_1d(double a, double b, double p0, const SolveConfig& cfg);

/// Moment comparison between the discrete Monge-Ampere measure of a solved
/// potential and the exact polytope moments n! * Int_P q(p) dp for
/// q in {1, coordinates, squares}.
struct PushforwardReport {
  double mass = 0.0;
  double mass_exact = 0.0;
  double mass_residual = 0.0;
  std::vector<double> first_moment;   // normalized: (Int p dMA)/mass
  std::vector<double> first_exact;    // barycenter of P
  double first_residual = 0.0;
  std::vector<double> second_moment;  // normalized diagonal second moments
  std::vector<double> second_exact;
  double second_residual = 0.0;
};

PushforwardReport verify_pushforward(const Potential1D& phi, const Polytope& p,
                                     const RatVec& p0);

/// Midpoint-concavity test of F(t) = -log Int e^{-((1-t)phi0 + t phi1)} dx
/// over a t-grid; t -> log Int is convex by Holder, so F must be concave.
struct PrekopaReport {
  std::vector<double> t_grid;
  std::vector<double> F;
  int pairs_checked = 0;
  int violations = 0;
  double max_violation = 0.0;  // most positive midpoint defect
};

PrekopaReport prekopa_property_check(const std::vector<double>& grid,
                                     const std::vector<double>& phi0,
                                     const std::vector<double>& phi1,
                                     int samples, double tolerance);

}  // namespace keconvex
