#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <keconvex/errors.hpp>
#include <keconvex/lie.hpp>
#include <keconvex/polytope.hpp>

#include "test_util.hpp"

#include <random>
#include <set>
#include <tuple>

using namespace keconvex;

TEST_CASE("Weyl vector pairs to one with every simple root") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
           {Family::C, 3}, {Family::D, 4}, {Family::G2, 2}}) {
    auto rs = build_root_system(fam, rank);
    for (const RatVec& a : rs.simple_roots)
      CHECK(Rat(2) * dot(rs.rho, a) / dot(a, a) == Rat(1));
    // Fundamental weights are dual to the simple coroots.
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Rat pairing = Rat(2) * dot(rs.fundamental_weights[i], rs.simple_roots[j]) /
                      dot(rs.simple_roots[j], rs.simple_roots[j]);
        CHECK(pairing == Rat(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("B2 root data: counts and length multiset") {
  auto b2 = build_root_system(Family::B, 2);
  CHECK(b2.positive_roots.size() == 4);
  std::multiset<Rat> norms;
  for (const RatVec& a : b2.positive_roots) norms.insert(dot(a, a));
  CHECK(norms == std::multiset<Rat>{Rat(1), Rat(1), Rat(2), Rat(2)});
}

TEST_CASE("flag degrees: classical values") {
  auto a2 = build_root_system(Family::A, 2);
  auto full = parabolic_subset(a2, {});
  CHECK(flag_degree(a2, full, anticanonical_weight(full)) == Rat(48));
  auto proj2 = parabolic_subset(a2, {1});
  CHECK(flag_degree(a2, proj2, anticanonical_weight(proj2)) == Rat(9));

  // Projective spaces P^n up to n = 4: degree (n+1)^n.
  for (int n = 1; n <= 4; ++n) {
    auto ar = build_root_system(Family::A, n);
    std::vector<int> keep;
    for (int i = 1; i < n; ++i) keep.push_back(i);
    auto ps = parabolic_subset(ar, keep);
    CHECK(static_cast<int>(ps.r_x_plus.size()) == n);
    CHECK(flag_degree(ar, ps, anticanonical_weight(ps)) ==
          rat_pow(Rat(n + 1), n));
  }

  auto g2 = build_root_system(Family::G2, 2);
  auto g2full = parabolic_subset(g2, {});
  CHECK(flag_degree(g2, g2full, anticanonical_weight(g2full)) == Rat(46080));
}

TEST_CASE("full flag degree at twice rho is n! times 2^n") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 3},
           {Family::G2, 2}}) {
    auto rs = build_root_system(fam, rank);
    auto full = parabolic_subset(rs, {});
    int n = static_cast<int>(full.r_x_plus.size());
    RatVec two_rho(rs.ambient, Rat(0));
    for (std::size_t i = 0; i < two_rho.size(); ++i) two_rho[i] = 2 * rs.rho[i];
    Rat deg = flag_degree(rs, full, two_rho);
    CHECK(deg == Rat(factorial(n)) * rat_pow(Rat(2), n));
    CHECK(deg <= rat_pow(Rat(n + 1), n));
  }
}

TEST_CASE("non-ample weights are rejected") {
  auto a2 = build_root_system(Family::A, 2);
  auto full = parabolic_subset(a2, {});
  CHECK_THROWS_AS(flag_degree(a2, full, weight_to_ambient(a2, {Rat(1), Rat(0)})),
                  NotAmple);
}

TEST_CASE("degree-bound scan over small ranks") {
  auto rep = snow_scan(3);
  CHECK(rep.cases.size() == 41);
  CHECK(rep.violations == 0);
  CHECK(rep.equalities == 10);
  // Equality cases are exactly the projective spaces, including the
  // exceptional isomorphisms B2/P_spin, C2/P_1, C3/P_1 and the two D3
  // spinor quotients: every such case has degree (n+1)^n.
  std::vector<std::tuple<Family, int, std::vector<int>, int>> expected = {
      {Family::A, 1, {}, 1},      {Family::A, 2, {0}, 2},
      {Family::A, 2, {1}, 2},     {Family::A, 3, {0, 1}, 3},
      {Family::A, 3, {1, 2}, 3},  {Family::B, 2, {0}, 3},
      {Family::C, 2, {1}, 3},     {Family::C, 3, {1, 2}, 5},
      {Family::D, 3, {0, 1}, 3},  {Family::D, 3, {0, 2}, 3}};
  std::vector<std::tuple<Family, int, std::vector<int>, int>> got;
  for (const auto& c : rep.cases) {
    if (!c.equality) continue;
    CHECK(c.degree == rat_pow(Rat(c.n + 1), c.n));
    got.emplace_back(c.family, c.rank, c.S, c.n);
  }
  CHECK(got == expected);
  CHECK_THROWS_AS(snow_scan(5), InvalidParameter);
}

TEST_CASE("simplex monomial integration formula") {
  std::vector<RatVec> tri = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  // Barycentric lambda_1 = x over the unit triangle: integral 1/6.
  CHECK(integrate_monomial_simplex(tri, {0, 1, 0}) == Rat(1, 6));
  CHECK(integrate_monomial_simplex(tri, {0, 1, 1}) == Rat(1, 24));
  CHECK(integrate_monomial_simplex(tri, {0, 0, 0}) == Rat(1, 2));

  auto square = Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(polytope_monomial_integral(square, {1, 1}) == Rat(1, 4));
  CHECK(polytope_monomial_integral(square, {2, 0}) == Rat(1, 3));
}

TEST_CASE("Duistermaat-Heckman density is positively homogeneous") {
  auto a2 = build_root_system(Family::A, 2);
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> num(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    RatVec w = {Rat(num(rng)), Rat(num(rng))};
    RatVec p = weight_to_ambient(a2, w);
    int positive = 0;
    for (const RatVec& a : a2.positive_roots)
      if (dot(a, p) > 0) ++positive;
    Rat c(num(rng));
    RatVec cp(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cp[i] = c * p[i];
    CHECK(dh_density(a2, cp) == rat_pow(c, positive) * dh_density(a2, p));
  }
}

TEST_CASE("DH integral on the A1 interval and the toric degeneration") {
  auto a1 = build_root_system(Family::A, 1);
  auto seg = Polytope::from_vertices(1, {{Rat(1)}, {Rat(3)}});
  CHECK(dh_integrate(a1, seg) == Rat(4));

  // v = 1 degeneration: an empty root system integrates plain volume.
  RootSystem trivial;
  trivial.family = Family::A;
  trivial.rank = 2;
  trivial.ambient = 2;
  trivial.fundamental_weights = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  trivial.rho = {Rat(0), Rat(0)};
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = testutil::random_positive_polytope(rng, 2, 6);
    CHECK(dh_integrate(trivial, p) == volume_and_barycenter(p).first);
  }
}

TEST_CASE("chamber walls are rejected exactly") {
  auto a1 = build_root_system(Family::A, 1);
  auto seg = Polytope::from_vertices(1, {{Rat(0)}, {Rat(2)}});
  CHECK_THROWS_AS(dh_integrate(a1, seg), ChamberViolation);
}

TEST_CASE("horospherical report: A1 interval fixture") {
  auto a1 = build_root_system(Family::A, 1);
  auto seg = Polytope::from_vertices(1, {{Rat(1)}, {Rat(3)}});
  auto rep = horospherical_check(a1, seg);
  CHECK(rep.dh_mass == Rat(4));
  CHECK(rep.dh_barycenter == RatVec{Rat(13, 6)});
  CHECK(rep.root_sum == RatVec{Rat(2)});
  CHECK(!rep.ke_candidate);
  CHECK(rep.n == 2);
  CHECK(rep.bound == Rat(9, 2));
  CHECK(rep.bound_status == BoundStatus::Holds);
  REQUIRE(!rep.notes.empty());
}

TEST_CASE("weight coordinate conversions invert each other") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::G2, 2}}) {
    auto rs = build_root_system(fam, rank);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec w(rs.rank);
      for (int i = 0; i < rs.rank; ++i) w[i] = Rat(num(rng));
      CHECK(ambient_to_weight(rs, weight_to_ambient(rs, w)) == w);
    }
  }
}
