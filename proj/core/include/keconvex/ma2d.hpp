#pragma once

#include "keconvex/ma1d.hpp"
#include "keconvex/polytope.hpp"

#include <vector>

namespace keconvex {

/// Sampled convex potential on the uniform (N x N) grid over [-R, R]^2,
/// row-major with index i*N + j for (x_i, y_j). Boundary data is the
/// support function of the target polytope plus the constant c.
struct GridPotential {
  double R = 0.0;
  double h = 0.0;
  int N = 0;
  std::vector<double> values;
  double c = 0.0;
};

double support_function(const Polytope& p, double x, double y);

/// Solves 2 det D^2 phi = e^{-phi + <p0,x>} on [-R,R]^2 with Dirichlet data
/// h_P + c, where c is driven so the right-hand-side mass matches
/// 2 Vol(P). Monotone two-direction determinant stencil, semismooth Newton
/// inner solve, cascadic mesh refinement. Throws NonBarycenterDivergence
/// when the gradient first moment of the converged measure stays away from
/// p0 (Thm-of-existence necessity); NoConvergence on budget exhaustion.
GridPotential solve_ma_2d(const Polytope& p, const RatVec& p0, const SolveConfig& cfg);

/// Monge-Ampere moments of a 2-D grid potential against exact polytope
/// moments; same report shape as the 1-D verifier.
PushforwardReport verify_pushforward(const GridPotential& phi, const Polytope& p,
                                     const RatVec& p0);

/// Discrete determinant residual diagnostics (sup over interior nodes of
/// |2 det_h phi - e^{-phi + <p0,x>}| restricted to the inner half-box).
double interior_residual(const GridPotential& phi, const RatVec& p0);

/// Minimum directional second difference over interior nodes and both
/// stencil bases; >= 0 (up to round-off) certifies discrete convexity.
double min_second_difference(const GridPotential& phi);

}  // namespace keconvex
