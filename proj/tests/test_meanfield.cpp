#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <keconvex/errors.hpp>
#include <keconvex/meanfield.hpp>

#include <cmath>

using namespace keconvex;

TEST_CASE("regularized Green profile: normalization and slope bounds") {
  for (double t : {1.0, 5.0, 10.0}) {
    CHECK(green_reg(t, 0.0) == 0.0);
    // Slope is a logistic function: strictly inside (0, 1), increasing.
    double prev = 0;
    for (double tau : {-20.0, -10.0, -3.0, 0.0, 3.0}) {
      double s = green_reg_slope(t, tau);
      CHECK(s > 0);
      CHECK(s < 1);
      CHECK(s >= prev);
      prev = s;
      // Finite-difference consistency.
      double fd = (green_reg(t, tau + 1e-6) - green_reg(t, tau - 1e-6)) / 2e-6;
      CHECK(s == doctest::Approx(fd).epsilon(1e-6));
    }
    // Pointwise limit: F_t(tau) -> tau for tau < 0 as t grows.
    CHECK(green_reg(40.0, -5.0) == doctest::Approx(-5.0).epsilon(1e-10));
  }
}

TEST_CASE("Monge-Ampere mass of the Green profile is the logistic power") {
  // Mass = F_t'(0)^n = (1 + e^{-2t})^{-n}.
  for (int n : {1, 2, 3}) {
    for (double t : {2.0, 6.0, 12.0}) {
      double expected = std::pow(1.0 + std::exp(-2 * t), -n);
      double slope0 = green_reg_slope(t, 0.0);
      CHECK(std::pow(slope0, n) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("non-integrability grows linearly in t") {
  // Closed form for n = 2 with a = e^{-2t}: substituting s = e^tau turns
  // Int e^{-2 F_t} dnu_2 into (1+a)^2 Int_0^1 s/(a+s)^2 ds
  //   = (1+a)^2 (log((1+a)/a) + a/(1+a) - 1)  ~  2t - 1.
  auto exact = [](double t) {
    double a = std::exp(-2 * t);
    return (1 + a) * (1 + a) * (std::log((1 + a) / a) + a / (1 + a) - 1);
  };
  double v5 = std::exp(green_nonintegrability(2, 5));
  double v10 = std::exp(green_nonintegrability(2, 10));
  double v15 = std::exp(green_nonintegrability(2, 15));
  CHECK(v5 == doctest::Approx(exact(5)).epsilon(1e-6));
  CHECK(v10 == doctest::Approx(exact(10)).epsilon(1e-6));
  CHECK(v15 == doctest::Approx(exact(15)).epsilon(1e-6));
  // Linear growth: equal increments of 10 along t = 5, 10, 15.
  CHECK(v10 - v5 == doctest::Approx(10.0).epsilon(1e-3));
  CHECK(v15 - v10 == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("criticality slopes at, above and below the threshold") {
  auto flat = criticality_slope(2, 3.0, 5, 15, 11);
  CHECK(std::abs(flat.slope) < 0.01);
  CHECK(flat.verdict == "critical");

  auto up = criticality_slope(2, 3.5, 5, 15, 11);
  CHECK(up.slope == doctest::Approx(4.0 / 21).epsilon(0.05));
  CHECK(up.verdict == "supercritical");
  CHECK(up.predicted == doctest::Approx(4.0 / 21).epsilon(1e-12));

  auto down = criticality_slope(2, 2.5, 5, 15, 11);
  CHECK(down.slope == doctest::Approx(-4.0 / 15).epsilon(0.05));
  CHECK(down.verdict == "subcritical");
}

TEST_CASE("radial profile: gamma = 0 reduces to the exponential") {
  SolveConfig cfg;
  auto f = radial_meanfield_solve(1, 0.0, cfg);
  double sup = 0;
  for (std::size_t i = 0; i < f.tau.size(); ++i)
    sup = std::max(sup, std::abs(f.f[i] - (std::exp(f.tau[i]) - 1)));
  CHECK(sup <= 1e-10);
  CHECK(f.f.back() == 0.0);  // normalization f(0) = 0
}

TEST_CASE("supercritical gamma yields a slope-cap certificate") {
  SolveConfig cfg;
  auto out = radial_meanfield_try(2, 3.2, cfg);
  CHECK(!out.solved);
  CHECK(out.cap_predicted == doctest::Approx(3.0 / 3.2).epsilon(1e-12));
  CHECK(out.slope_cap <= out.cap_predicted + 1e-9);
  CHECK(out.slope_cap < 1.0);
  CHECK_THROWS_AS(radial_meanfield_solve(2, 3.2, cfg), NoSolution);
}

TEST_CASE("Green-profile deviations decrease along gamma") {
  SolveConfig cfg;
  auto rep = green_limit_check(2, {2.0, 2.5, 2.9}, cfg);
  REQUIRE(rep.deviations.size() == 3);
  CHECK(rep.monotone_decreasing);
  CHECK(rep.deviations[0] > rep.deviations[1]);
  CHECK(rep.deviations[1] > rep.deviations[2]);
}

TEST_CASE("profile evaluation: endpoints and interpolation") {
  SolveConfig cfg;
  auto f = radial_meanfield_solve(1, 0.0, cfg);
  CHECK(eval_profile(f, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  // Piecewise-linear interpolation between nodes: O(h^2) at off-node points.
  double mid = eval_profile(f, -1.005);
  CHECK(mid == doctest::Approx(std::exp(-1.005) - 1).epsilon(1e-4));
  CHECK(eval_profile_slope(f, -1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
}
