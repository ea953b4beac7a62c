#include "keconvex/ma2d.hpp"

#include "keconvex/errors.hpp"
#include "keconvex/lie.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace keconvex {

namespace {

double safe_exp(double x) { return std::exp(std::min(x, 700.0)); }

struct Problem {
  double R = 0;
  double h = 0;
  int N = 0;
  std::vector<double> vx, vy;  // polytope vertices (doubles)
  double p0x = 0, p0y = 0;
  double target_mass = 0;  // 2 Vol(P)
};

double support(const Problem& pb, double x, double y) {
  double best = -1e300;
  for (std::size_t k = 0; k < pb.vx.size(); ++k)
    best = std::max(best, pb.vx[k] * x + pb.vy[k] * y);
  return best;
}

double node_x(const Problem& pb, int i) { return -pb.R + i * pb.h; }

/// Smooth convex initializer asymptotic to the support function.
double lse_init(const Problem& pb, double x, double y) {
  double mx = support(pb, x, y);
  double s = 0;
  for (std::size_t k = 0; k < pb.vx.size(); ++k)
    s += std::exp(pb.vx[k] * x + pb.vy[k] * y - mx);
  return mx + std::log(s);
}

void impose_boundary(const Problem& pb, std::vector<double>& u, double c) {
  const int N = pb.N;
  for (int i = 0; i < N; ++i) {
    for (int j : {0, N - 1}) {
      u[i * N + j] = support(pb, node_x(pb, i), node_x(pb, j)) + c;
      u[j * N + i] = support(pb, node_x(pb, j), node_x(pb, i)) + c;
    }
  }
}

/// Monotone two-basis determinant at an interior node. d holds the four
/// directional second differences (xx, yy, diag+, diag-).
struct DetEval {
  double value = 0;
  bool axis_basis = true;  // which basis attains the minimum
  double g1 = 0, g2 = 0;   // branch derivatives wrt the active pair
  double d[4] = {0, 0, 0, 0};
};

DetEval det_node(const std::vector<double>& u, int N, double h, int i, int j) {
  const double s1 = 1.0 / (h * h), s2 = 1.0 / (2 * h * h);
  double uc = u[i * N + j];
  DetEval e;
  e.d[0] = (u[(i + 1) * N + j] + u[(i - 1) * N + j] - 2 * uc) * s1;
  e.d[1] = (u[i * N + j + 1] + u[i * N + j - 1] - 2 * uc) * s1;
  e.d[2] = (u[(i + 1) * N + j + 1] + u[(i - 1) * N + j - 1] - 2 * uc) * s2;
  e.d[3] = (u[(i + 1) * N + j - 1] + u[(i - 1) * N + j + 1] - 2 * uc) * s2;
  auto bfo = [](double a, double b) {
    return std::max(a, 0.0) * std::max(b, 0.0) + std::min(a, 0.0) + std::min(b, 0.0);
  };
  double det1 = bfo(e.d[0], e.d[1]);
  double det2 = bfo(e.d[2], e.d[3]);
  auto dd = [](double a, double b) { return a > 0 ? std::max(b, 0.0) : 1.0; };
  if (det1 <= det2) {
    e.value = det1;
    e.axis_basis = true;
    e.g1 = dd(e.d[0], e.d[1]);
    e.g2 = dd(e.d[1], e.d[0]);
  } else {
    e.value = det2;
    e.axis_basis = false;
    e.g1 = dd(e.d[2], e.d[3]);
    e.g2 = dd(e.d[3], e.d[2]);
  }
  return e;
}

/// Residual and Jacobian of the interior equations plus the relative mass
/// equation, for the state (u interior, c). Boundary values are h_P + c.
/// The Jacobian is kept in bordered form: interior block A, the c-column b
/// (stencil weights that hit boundary nodes), and the mass row d.
struct System {
  Eigen::VectorXd res;       // interior residuals, size M
  double res_mass = 0;       // relative mass equation
  std::vector<Eigen::Triplet<double>> trips;  // A, M x M
  Eigen::VectorXd col_c;     // b
  Eigen::VectorXd row_mass;  // d
};

void assemble(const Problem& pb, const std::vector<double>& u, double c,
              bool want_jac, System& sys) {
  const int N = pb.N;
  const int n_in = N - 2;
  const int M = n_in * n_in;
  const double h = pb.h, s1 = 1.0 / (h * h), s2 = 1.0 / (2 * h * h);
  sys.res.resize(M);
  if (want_jac) {
    sys.trips.clear();
    sys.trips.reserve(static_cast<std::size_t>(M) * 5);
    sys.col_c = Eigen::VectorXd::Zero(M);
    sys.row_mass.resize(M);
  }
  double mass = 0;
  auto var = [n_in](int i, int j) { return (i - 1) * n_in + (j - 1); };
  for (int i = 1; i <= n_in; ++i) {
    for (int j = 1; j <= n_in; ++j) {
      DetEval e = det_node(u, N, h, i, j);
      double x = node_x(pb, i), y = node_x(pb, j);
      double F = safe_exp(-u[i * N + j] + pb.p0x * x + pb.p0y * y);
      int row = var(i, j);
      sys.res[row] = 2 * e.value - F;
      mass += F;
      if (!want_jac) continue;
      double s = e.axis_basis ? s1 : s2;
      double diag = 2 * (-2 * s) * (e.g1 + e.g2) + F;
      sys.trips.emplace_back(row, row, diag);
      // Offsets of the active basis pair (g1 direction, then g2 direction).
      int off[4][2];
      if (e.axis_basis) {
        off[0][0] = 1;  off[0][1] = 0;
        off[1][0] = -1; off[1][1] = 0;
        off[2][0] = 0;  off[2][1] = 1;
        off[3][0] = 0;  off[3][1] = -1;
      } else {
        off[0][0] = 1;  off[0][1] = 1;
        off[1][0] = -1; off[1][1] = -1;
        off[2][0] = 1;  off[2][1] = -1;
        off[3][0] = -1; off[3][1] = 1;
      }
      double gv[4] = {e.g1, e.g1, e.g2, e.g2};
      for (int k = 0; k < 4; ++k) {
        int in = i + off[k][0], jn = j + off[k][1];
        double val = 2 * s * gv[k];
        if (in >= 1 && in <= n_in && jn >= 1 && jn <= n_in)
          sys.trips.emplace_back(row, var(in, jn), val);
        else
          sys.col_c[row] += val;  // boundary node: depends on c
      }
      sys.row_mass[row] = -h * h * F / pb.target_mass;
    }
  }
  sys.res_mass = mass * h * h / pb.target_mass - 1.0;
}

double residual_norm(const System& sys) {
  return std::max(sys.res.cwiseAbs().maxCoeff(), std::abs(sys.res_mass));
}

/// Line-search merit: the Newton direction is a guaranteed descent direction
/// for the least-squares residual, unlike the sup norm, which chatters when
/// the active stencil basis flips at a few nodes.
double merit(const System& sys) {
  return sys.res.squaredNorm() + sys.res_mass * sys.res_mass;
}

/// Solves the bordered system [A b; d^T 0] [du; dc] = -[r; r_mass] by a
/// Schur complement on c: two solves with A, then elimination.
template <typename Solver>
void bordered_solve(Solver& solver, const System& sys, Eigen::VectorXd& du,
                    double& dc) {
  Eigen::VectorXd x1 = solver.solve(-sys.res);
  Eigen::VectorXd x2 = solver.solve(sys.col_c);
  double denom = sys.row_mass.dot(x2);
  if (denom == 0.0)
    throw NoConvergence("singular mass coupling in the 2-D Newton iteration");
  dc = (sys.row_mass.dot(x1) + sys.res_mass) / denom;
  du = x1 - dc * x2;
}

/// Bordered semismooth Newton on (u interior, c). Returns the final sup
/// residual; throws NoConvergence on stalls. The Jacobian factorization is
/// frozen across iterations and refreshed only when a step degrades, so the
/// expensive fine-grid factorizations happen a handful of times per level.
double newton_solve(const Problem& pb, std::vector<double>& u, double& c,
                    double tol, int max_iter) {
  const int N = pb.N;
  const int n_in = N - 2;
  const int M = n_in * n_in;
  System sys;
  impose_boundary(pb, u, c);
  assemble(pb, u, c, true, sys);
  double rn = residual_norm(sys);
  if (std::getenv("KECONVEX_TRACE")) {
    int idx = 0;
    sys.res.cwiseAbs().maxCoeff(&idx);
    std::fprintf(stderr, "[ma2d] M=%d start rn=%.3e at (%d,%d) of n_in=%d\n", M,
                 rn, idx / n_in + 1, idx % n_in + 1, n_in);
  }
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  bool have_fact = false;  // factorization exists (possibly stale)
  bool fresh = false;      // factorization is of the current iterate
  for (int it = 0; it < max_iter; ++it) {
    if (rn < tol) return rn;
    if (!have_fact) {
      Eigen::SparseMatrix<double> A(M, M);
      A.setFromTriplets(sys.trips.begin(), sys.trips.end());
      lu.compute(A);
      if (lu.info() != Eigen::Success)
        throw NoConvergence("linear solve failed in the 2-D Newton iteration");
      have_fact = true;
      fresh = true;
    }
    Eigen::VectorXd du;
    double dc = 0;
    bordered_solve(lu, sys, du, dc);
    if (std::abs(dc) > 1.0) {
      du *= 1.0 / std::abs(dc);
      dc /= std::abs(dc);
    }
    const double m0 = merit(sys);
    double step = 1.0;
    std::vector<double> u_try;
    double c_try = c;
    System probe;
    bool improved = false;
    for (int ls = 0; ls < 25; ++ls) {
      u_try = u;
      c_try = c + step * dc;
      for (int i = 1; i <= n_in; ++i)
        for (int j = 1; j <= n_in; ++j)
          u_try[i * N + j] += step * du[(i - 1) * n_in + (j - 1)];
      impose_boundary(pb, u_try, c_try);
      assemble(pb, u_try, c_try, false, probe);
      // Either norm counts as progress: the sup norm chatters when the
      // active stencil basis flips, the least-squares norm can plateau on
      // the far-from-solution kink set of the initializer.
      if (merit(probe) < m0 || residual_norm(probe) < rn) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) {
      if (std::getenv("KECONVEX_TRACE"))
        std::fprintf(stderr, "[ma2d] M=%d it=%d rn=%.3e STALL fresh=%d dc=%.3e |du|=%.3e\n",
                     M, it, rn, fresh ? 1 : 0, dc, du.cwiseAbs().maxCoeff());
      if (fresh)
        throw NoConvergence("line search stalled in the 2-D Newton iteration");
      have_fact = false;  // stale direction; refactorize and retry
      continue;
    }
    u = std::move(u_try);
    c = c_try;
    assemble(pb, u, c, true, sys);
    double rn_new = residual_norm(sys);
    if (std::getenv("KECONVEX_TRACE"))
      std::fprintf(stderr, "[ma2d] M=%d it=%d rn=%.3e -> %.3e step=%.3g c=%.6f\n",
                   M, it, rn, rn_new, step, c);
    // Keep the factorization only while it still gives near-Newton progress:
    // a full step with at least a tenfold residual reduction.
    if (step < 1.0 || merit(sys) > 0.01 * m0) have_fact = false;
    fresh = false;
    rn = rn_new;
  }
  if (rn < tol) return rn;
  throw NoConvergence("2-D Newton iteration budget exhausted");
}

Problem make_problem(const Polytope& p, const RatVec& p0, double R, int steps) {
  Problem pb;
  pb.R = R;
  pb.h = 2 * R / steps;
  pb.N = steps + 1;
  for (const RatVec& v : p.v().vertices) {
    pb.vx.push_back(static_cast<double>(v[0]));
    pb.vy.push_back(static_cast<double>(v[1]));
  }
  pb.p0x = static_cast<double>(p0[0]);
  pb.p0y = static_cast<double>(p0[1]);
  pb.target_mass = 2.0 * static_cast<double>(volume_and_barycenter(p).first);
  return pb;
}

/// Midpoint value by 4-point cubic interpolation along one index of a
/// strided sequence; linear at the ends. Cubic order matters here: linear
/// interpolation zeroes the directional second difference at inserted nodes,
/// which makes the monotone determinant collapse and hands the next level an
/// O(1) initial residual.
double midpoint(const std::vector<double>& v, std::size_t base,
                std::size_t stride, int i, int n) {
  auto at = [&](int k) { return v[base + stride * k]; };
  double a = at(i), b = at(i + 1);
  if (n < 4) return 0.5 * (a + b);
  // One-sided cubic at the ends: a linear fallback leaves an O(h^2) value
  // error whose second difference is O(1), which poisons the first interior
  // ring of the refined grid.
  if (i == 0) return (5 * a + 15 * b - 5 * at(2) + at(3)) / 16.0;
  if (i + 2 >= n) return (at(i - 2) - 5 * at(i - 1) + 15 * a + 5 * b) / 16.0;
  return (9.0 * (a + b) - at(i - 1) - at(i + 2)) / 16.0;
}

/// Prolongation from a coarse grid (Nc) to Nf = 2(Nc-1)+1, cubic in each
/// direction.
std::vector<double> prolong(const std::vector<double>& uc, int Nc) {
  int Nf = 2 * (Nc - 1) + 1;
  std::vector<double> uf(static_cast<std::size_t>(Nf) * Nf, 0.0);
  // Even rows: interpolate each coarse row.
  for (int i = 0; i < Nc; ++i) {
    for (int j = 0; j < Nc; ++j) uf[(2 * i) * Nf + 2 * j] = uc[i * Nc + j];
    for (int j = 0; j + 1 < Nc; ++j)
      uf[(2 * i) * Nf + 2 * j + 1] = midpoint(uc, i * Nc, 1, j, Nc);
  }
  // Odd rows: interpolate every fine column from the even rows.
  for (int j = 0; j < Nf; ++j)
    for (int i = 0; i + 1 < Nc; ++i)
      uf[(2 * i + 1) * Nf + j] = midpoint(uf, j, 2 * Nf, i, Nc);
  return uf;
}

/// Pointwise nonlinear Gauss-Seidel sweeps: scalar Newton on each interior
/// node with its neighbours frozen. Cheap O(N^2) smoothing that removes the
/// boundary-layer mismatch a prolongated coarse solution carries on the ring
/// next to the Dirichlet data, where interpolation degenerates to
/// extrapolation of an unresolved layer.
void gs_smooth(const Problem& pb, std::vector<double>& u, int sweeps,
               int band = -1) {
  const int N = pb.N;
  const double h = pb.h, s1 = 1.0 / (h * h), s2 = 1.0 / (2 * h * h);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int i = 1; i + 1 < N; ++i) {
      for (int j = 1; j + 1 < N; ++j) {
        if (band > 0 && std::min({i, j, N - 1 - i, N - 1 - j}) > band) continue;
        double x = node_x(pb, i), y = node_x(pb, j);
        for (int inner = 0; inner < 2; ++inner) {
          DetEval e = det_node(u, N, h, i, j);
          double F = safe_exp(-u[i * N + j] + pb.p0x * x + pb.p0y * y);
          double r = 2 * e.value - F;
          double s = e.axis_basis ? s1 : s2;
          double dr = -4 * s * (e.g1 + e.g2) + F;
          if (std::abs(dr) < 1e-12) break;
          double step = -r / dr;
          step = std::clamp(step, -10 * h, 10 * h);
          u[i * N + j] += step;
        }
      }
    }
  }
}

void gradient_moment(const Problem& pb, const std::vector<double>& u,
                     double& mx, double& my) {
  const int N = pb.N;
  double mass = 0, sx = 0, sy = 0;
  for (int i = 1; i + 1 < N; ++i) {
    for (int j = 1; j + 1 < N; ++j) {
      double x = node_x(pb, i), y = node_x(pb, j);
      double F = safe_exp(-u[i * N + j] + pb.p0x * x + pb.p0y * y);
      double gx = (u[(i + 1) * N + j] - u[(i - 1) * N + j]) / (2 * pb.h);
      double gy = (u[i * N + j + 1] - u[i * N + j - 1]) / (2 * pb.h);
      mass += F;
      sx += gx * F;
      sy += gy * F;
    }
  }
  mx = sx / mass;
  my = sy / mass;
}

/// Full cascadic solve at one truncation radius. Starts from the smooth
/// support-function surrogate on the coarsest level and refines by halving.
double cascade_solve(const Polytope& p, const RatVec& p0, double R,
                     double h_target, double tol, int max_iter,
                     Problem& pb, std::vector<double>& u) {
  // Levels are nested step counts so each refinement exactly doubles the
  // mesh; the coarsest level stays near h ~ 0.25 for a cheap global start.
  int steps = std::max(8, static_cast<int>(std::lround(2 * R / h_target)));
  if (steps % 2) ++steps;
  std::vector<int> levels{steps};
  while (levels.back() % 2 == 0 && levels.back() / 2 >= 8 &&
         2 * R / levels.back() < 0.24 && levels.size() < 6)
    levels.push_back(levels.back() / 2);
  std::reverse(levels.begin(), levels.end());

  pb = make_problem(p, p0, R, levels.front());
  u.assign(static_cast<std::size_t>(pb.N) * pb.N, 0.0);
  double c = 0.0;
  for (int i = 0; i < pb.N; ++i)
    for (int j = 0; j < pb.N; ++j)
      u[i * pb.N + j] = lse_init(pb, node_x(pb, i), node_x(pb, j)) + c;

  for (std::size_t lev = 0; lev < levels.size(); ++lev) {
    if (lev > 0) {
      int Nc = pb.N;
      pb = make_problem(p, p0, R, levels[lev]);
      u = prolong(u, Nc);
      if (static_cast<int>(u.size()) != pb.N * pb.N)
        throw NoConvergence("internal mesh refinement mismatch");
      impose_boundary(pb, u, c);
      // The prolongated boundary layer needs most of the smoothing; the
      // band sweeps are O(N) each.
      gs_smooth(pb, u, 4);
      gs_smooth(pb, u, 60, 8);
    }
    // Coarse levels only need to seed the next one.
    double level_tol = (lev + 1 == levels.size()) ? tol : std::max(tol, 1e-8);
    newton_solve(pb, u, c, level_tol, max_iter);
  }
  return c;
}

/// Off-barycenter detection. An entire solution exists only when p0 is the
/// barycenter; otherwise the gradient image of the truncated problem is a
/// translate of P and the mass-matching constant c(R) drifts linearly in the
/// truncation radius instead of settling. Compare c at R/2, 3R/4 and R on a
/// shared coarse mesh: converging increments decay geometrically, a drift
/// keeps them level.
void check_c_drift(const Polytope& p, const RatVec& p0, double R, double diam,
                   double tol, int max_iter) {
  if (R < 2.5 * diam) return;  // radii too entangled with the O(1) layer
  const double h_aux = diam / 12.0;
  double c_vals[3];
  const double radii[3] = {R / 2, 0.75 * R, R};
  for (int k = 0; k < 3; ++k) {
    Problem pb;
    std::vector<double> u;
    c_vals[k] = cascade_solve(p, p0, radii[k], h_aux, std::max(tol, 1e-9),
                              max_iter, pb, u);
  }
  double d1 = c_vals[1] - c_vals[0];
  double d2 = c_vals[2] - c_vals[1];
  if (std::abs(d2) > 0.01 && std::abs(d2) > 0.8 * std::abs(d1)) {
    std::ostringstream msg;
    msg << "mass-matching constant drifts with the truncation radius (c = "
        << c_vals[0] << ", " << c_vals[1] << ", " << c_vals[2] << " at R = "
        << radii[0] << ", " << radii[1] << ", " << radii[2]
        << "): p0 is not the barycenter of the polytope";
    throw NonBarycenterDivergence(msg.str());
  }
}

}  // namespace

double support_function(const Polytope& p, double x, double y) {
  double best = -1e300;
  for (const RatVec& v : p.v().vertices)
    best = std::max(best, static_cast<double>(v[0]) * x + static_cast<double>(v[1]) * y);
  return best;
}

GridPotential solve_ma_2d(const Polytope& p, const RatVec& p0, const SolveConfig& cfg) {
  if (p.dim() != 2) throw InvalidParameter("expected a 2-D polytope");
  if (!p.strictly_contains(p0))
    throw InvalidParameter("p0 must lie strictly inside the polytope");
  double diam = 0;
  for (const RatVec& a : p.v().vertices)
    for (const RatVec& b : p.v().vertices) {
      double dx = static_cast<double>(a[0] - b[0]);
      double dy = static_cast<double>(a[1] - b[1]);
      diam = std::max(diam, std::hypot(dx, dy));
    }
  const double R = cfg.R > 0 ? cfg.R : 8.0 * diam;
  const double h_target = cfg.h > 0 ? cfg.h : 1.0 / 32;
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-10;
  const int max_iter = cfg.max_iter > 0 ? cfg.max_iter : 60;

  // Cheap coarse-mesh probe first: off-barycenter data is rejected before
  // paying for the fine solve.
  check_c_drift(p, p0, R, diam, tol, max_iter);

  Problem pb;
  std::vector<double> u;
  double c = cascade_solve(p, p0, R, h_target, tol, max_iter, pb, u);

  double mx, my;
  gradient_moment(pb, u, mx, my);
  double defect = std::hypot(mx - pb.p0x, my - pb.p0y);
  if (defect > 0.05) {
    std::ostringstream msg;
    msg << "gradient-moment defect " << defect
        << " indicates p0 is not the barycenter of the polytope";
    throw NonBarycenterDivergence(msg.str());
  }

  GridPotential out;
  out.R = pb.R;
  out.h = pb.h;
  out.N = pb.N;
  out.values = std::move(u);
  out.c = c;
  return out;
}

PushforwardReport verify_pushforward(const GridPotential& phi, const Polytope& p,
                                     const RatVec& p0) {
  if (p.dim() != 2) throw InvalidParameter("expected a 2-D polytope");
  const int N = phi.N;
  const double h = phi.h;
  const double p0x = static_cast<double>(p0[0]);
  const double p0y = static_cast<double>(p0[1]);
  double s0 = 0, s1x = 0, s1y = 0, s2x = 0, s2y = 0;
  for (int i = 1; i + 1 < N; ++i) {
    for (int j = 1; j + 1 < N; ++j) {
      double x = -phi.R + i * h, y = -phi.R + j * h;
      double F = safe_exp(-phi.values[i * N + j] + p0x * x + p0y * y);
      double gx = (phi.values[(i + 1) * N + j] - phi.values[(i - 1) * N + j]) / (2 * h);
      double gy = (phi.values[i * N + j + 1] - phi.values[i * N + j - 1]) / (2 * h);
      s0 += F;
      s1x += gx * F;
      s1y += gy * F;
      s2x += gx * gx * F;
      s2y += gy * gy * F;
    }
  }
  double w = h * h;
  s0 *= w;
  s1x *= w;
  s1y *= w;
  s2x *= w;
  s2y *= w;

  auto [vol, bary] = volume_and_barycenter(p);
  PushforwardReport rep;
  rep.mass = s0;
  rep.mass_exact = 2.0 * static_cast<double>(vol);
  rep.mass_residual = std::abs(rep.mass - rep.mass_exact);
  rep.first_moment = {s1x / s0, s1y / s0};
  rep.first_exact = {static_cast<double>(bary[0]), static_cast<double>(bary[1])};
  rep.first_residual = std::max(std::abs(rep.first_moment[0] - rep.first_exact[0]),
                                std::abs(rep.first_moment[1] - rep.first_exact[1]));
  Rat m2x = polytope_monomial_integral(p, {2, 0}) / vol;
  Rat m2y = polytope_monomial_integral(p, {0, 2}) / vol;
  rep.second_moment = {s2x / s0, s2y / s0};
  rep.second_exact = {static_cast<double>(m2x), static_cast<double>(m2y)};
  rep.second_residual = std::max(std::abs(rep.second_moment[0] - rep.second_exact[0]),
                                 std::abs(rep.second_moment[1] - rep.second_exact[1]));
  return rep;
}

double interior_residual(const GridPotential& phi, const RatVec& p0) {
  const int N = phi.N;
  const double h = phi.h;
  const double p0x = static_cast<double>(p0[0]);
  const double p0y = static_cast<double>(p0[1]);
  double worst = 0;
  for (int i = 1; i + 1 < N; ++i) {
    for (int j = 1; j + 1 < N; ++j) {
      double x = -phi.R + i * h, y = -phi.R + j * h;
      if (std::abs(x) > phi.R / 2 || std::abs(y) > phi.R / 2) continue;
      DetEval e = det_node(phi.values, N, h, i, j);
      double F = safe_exp(-phi.values[i * N + j] + p0x * x + p0y * y);
      worst = std::max(worst, std::abs(2 * e.value - F));
    }
  }
  return worst;
}

double min_second_difference(const GridPotential& phi) {
  const int N = phi.N;
  double worst = 1e300;
  for (int i = 1; i + 1 < N; ++i)
    for (int j = 1; j + 1 < N; ++j) {
      DetEval e = det_node(phi.values, N, phi.h, i, j);
      for (double d : e.d) worst = std::min(worst, d);
    }
  return worst;
}

}  // namespace keconvex
