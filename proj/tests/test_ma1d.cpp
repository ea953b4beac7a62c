#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <keconvex/errors.hpp>
#include <keconvex/ma1d.hpp>
#include <keconvex/polytope.hpp>

#include <cmath>
#include <vector>

using namespace keconvex;

namespace {

double closed_form(double x) { return 2 * std::log(std::cosh(x / 2)) + std::log(2.0); }

}  // namespace

TEST_CASE("symmetric interval matches the closed form") {
  SolveConfig cfg;
  auto phi = solve_ma_1d(-1, 1, 0, cfg);
  double sup = 0;
  for (std::size_t i = 0; i < phi.grid.size(); ++i)
    sup = std::max(sup, std::abs(phi.values[i] - closed_form(phi.grid[i])));
  CHECK(sup <= 1e-8);
  CHECK(phi.dleft == doctest::Approx(std::tanh(-5.0)).epsilon(1e-10));
  CHECK(phi.dright == doctest::Approx(std::tanh(5.0)).epsilon(1e-10));
}

TEST_CASE("shift identity: translated interval adds a linear term") {
  SolveConfig cfg;
  auto phi = solve_ma_1d(0, 2, 1, cfg);
  double sup = 0;
  for (std::size_t i = 0; i < phi.grid.size(); ++i) {
    double x = phi.grid[i];
    sup = std::max(sup, std::abs(phi.values[i] - (closed_form(x) + x)));
  }
  CHECK(sup <= 1e-8);
}

TEST_CASE("scaling equivariance of the solved profile") {
  // If phi solves for [a,b], then phi(x) + const solves the same equation;
  // the solver's gauge is fixed by the asymptotic slopes, so two runs with
  // different truncation radii agree where they overlap.
  SolveConfig c1, c2;
  c1.R = 10;
  c2.R = 12;
  auto p1 = solve_ma_1d(-1, 1, 0, c1);
  auto p2 = solve_ma_1d(-1, 1, 0, c2);
  for (double x : {-5.0, -1.0, 0.0, 2.0, 5.0})
    CHECK(eval_potential(p1, x) ==
          doctest::Approx(eval_potential(p2, x)).epsilon(1e-8));
}

TEST_CASE("pushforward moments match the interval exactly") {
  SolveConfig cfg;
  auto phi = solve_ma_1d(-1, 1, 0, cfg);
  auto seg = Polytope::from_vertices(1, {{Rat(-1)}, {Rat(1)}});
  auto rep = verify_pushforward(phi, seg, {Rat(0)});
  CHECK(rep.mass_exact == 2.0);
  CHECK(rep.mass_residual <= 1e-8);
  CHECK(rep.first_residual <= 1e-8);
  CHECK(rep.second_residual <= 1e-6);
}

TEST_CASE("off-barycenter target is detected as divergent") {
  SolveConfig cfg;
  CHECK_THROWS_AS(solve_ma_1d(-1, 1, 1.0 / 3, cfg), NonBarycenterDivergence);
  CHECK_THROWS_AS(solve_ma_1d(0, 2, 0.5, cfg), NonBarycenterDivergence);
}

TEST_CASE("invalid intervals are input errors") {
  SolveConfig cfg;
  CHECK_THROWS_AS(solve_ma_1d(1, -1, 0, cfg), InvalidParameter);
  CHECK_THROWS_AS(solve_ma_1d(-1, 1, 2, cfg), InvalidParameter);
}

TEST_CASE("midpoint concavity of the log-integral along potential segments") {
  // Gaussian oracle: phi_t = (1-t) x^2/2 + t (x^2/2 + x); completing the
  // square gives F(t) = -t^2/2 - log sqrt(2 pi), concave in t.
  const int m = 4001;
  std::vector<double> grid(m), phi0(m), phi1(m);
  for (int i = 0; i < m; ++i) {
    double x = -20 + 40.0 * i / (m - 1);
    grid[i] = x;
    phi0[i] = x * x / 2;
    phi1[i] = x * x / 2 + x;
  }
  auto rep = prekopa_property_check(grid, phi0, phi1, 21, 1e-9);
  CHECK(rep.violations == 0);
  CHECK(rep.pairs_checked > 50);
  double c = -std::log(std::sqrt(2 * std::acos(-1.0)));
  for (int k = 0; k < 21; ++k) {
    double t = rep.t_grid[k];
    CHECK(rep.F[k] == doctest::Approx(-t * t / 2 + c).epsilon(1e-6));
  }
}

TEST_CASE("concavity holds for a mixed-curvature Gaussian family") {
  const int m = 2001;
  std::vector<double> grid(m), phi0(m), phi1(m);
  for (int i = 0; i < m; ++i) {
    double x = -15 + 30.0 * i / (m - 1);
    grid[i] = x;
    phi0[i] = x * x / 2;
    phi1[i] = x * x;  // different curvature: F stays concave
  }
  auto rep = prekopa_property_check(grid, phi0, phi1, 15, 1e-9);
  CHECK(rep.violations == 0);
  CHECK(rep.max_violation <= 1e-9);
}
