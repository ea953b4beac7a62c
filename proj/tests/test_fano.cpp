#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <keconvex/fano.hpp>
#include <keconvex/polytope.hpp>
#include <keconvex/rational.hpp>

#include "test_util.hpp"

#include <random>

using namespace keconvex;
using testutil::random_direction;
using testutil::random_positive_polytope;

TEST_CASE("anticanonical triangle: equality and existence") {
  auto p2 = Polytope::from_vertices(
      2, {{Rat(-1), Rat(-1)}, {Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
  auto v = ehrhart_check(p2);
  CHECK(v.volume == Rat(9, 2));
  CHECK(v.degree == Rat(9));
  CHECK(v.bound == Rat(9, 2));
  CHECK(v.status == BoundStatus::Equality);
  CHECK(ke_exists_toric(p2));

  auto bl1 = Polytope::from_vertices(
      2, {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}, {Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}});
  CHECK(!ke_exists_toric(bl1));
  CHECK(is_reflexive(bl1));
}

TEST_CASE("hexagon: balanced blow-up keeps the Einstein criterion") {
  auto bl3 = Polytope::from_vertices(
      2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(1)},
          {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}});
  CHECK(ke_exists_toric(bl3));
  CHECK(ehrhart_check(bl3).status == BoundStatus::Holds);
}

TEST_CASE("diagonal normalization never beats the simplex bound") {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 200) {
    int dim = (done % 2 == 0) ? 2 : 3;
    auto p = random_positive_polytope(rng, dim, dim + 4);
    auto [vol, bary] = volume_and_barycenter(p);
    // Diagonal scaling x_i -> x_i / bary_i moves the barycenter to (1,...,1).
    std::vector<RatVec> scaled;
    for (const RatVec& v : p.v().vertices) {
      RatVec w(dim);
      for (int i = 0; i < dim; ++i) w[i] = v[i] / bary[i];
      scaled.push_back(std::move(w));
    }
    auto q = Polytope::from_vertices(dim, scaled);
    auto [qvol, qbary] = volume_and_barycenter(q);
    CHECK(qbary == RatVec(dim, Rat(1)));
    Rat bound = rat_pow(Rat(dim + 1), dim) / Rat(factorial(dim));
    CHECK(qvol <= bound);
    ++done;
  }
}

TEST_CASE("affine normalization satisfies the determinant identity") {
  for (const auto& p : testutil::reflexive_corpus()) {
    auto [q, map] = affine_normalize(p);
    CHECK(volume_and_barycenter(q).first ==
          map.det_abs * volume_and_barycenter(p).first);
    CHECK(volume_and_barycenter(q).second == RatVec(p.dim(), Rat(1)));
  }
}

TEST_CASE("barycenter cut bound holds on random polytopes and directions") {
  std::mt19937_64 rng(987654321);
  int done = 0;
  while (done < 500) {
    int dim = (done % 3 == 0) ? 3 : 2;
    auto p = random_positive_polytope(rng, dim, dim + 3);
    RatVec d = random_direction(rng, dim);
    auto g = grunbaum_check(p, d);
    CHECK(g.holds);
    CHECK(g.clipped_volume >= g.bound);
    ++done;
  }
}

TEST_CASE("barycenter cut: simplex direction achieves exact equality") {
  auto s3 = Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(3)}});
  auto g = grunbaum_check(s3, {Rat(1), Rat(0)});
  CHECK(g.clipped_volume == Rat(2));
  CHECK(g.bound == Rat(2));
  CHECK(g.equality);
}

TEST_CASE("barycenter cut bound is scaling covariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_positive_polytope(rng, 2, 6);
    std::vector<RatVec> scaled;
    for (const RatVec& v : p.v().vertices) scaled.push_back({v[0] * 5, v[1] * 5});
    auto q = Polytope::from_vertices(2, scaled);
    RatVec d = random_direction(rng, 2);
    auto gp = grunbaum_check(p, d);
    auto gq = grunbaum_check(q, d);
    CHECK(gq.clipped_volume == gp.clipped_volume * 25);
    CHECK(gq.bound == gp.bound * 25);
    CHECK(gq.equality == gp.equality);
  }
}

TEST_CASE("Ricci lower-bound degree test") {
  auto p2 = Polytope::from_vertices(
      2, {{Rat(-1), Rat(-1)}, {Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
  // r = 1 recovers the plain degree bound, met with equality.
  auto full = ricci_bound_check(p2, Rat(1));
  CHECK(full.status == BoundStatus::Equality);
  REQUIRE(full.r_max.has_value());
  CHECK(*full.r_max == doctest::Approx(1.0).epsilon(1e-12));
  // Any r < 1 strictly relaxes the bound.
  auto relaxed = ricci_bound_check(p2, Rat(1, 2));
  CHECK(relaxed.status == BoundStatus::Holds);
  CHECK(relaxed.bound > full.bound);
  // A polytope too big for the bound at r = 1.
  auto big = Polytope::from_vertices(
      2, {{Rat(-3), Rat(-3)}, {Rat(3), Rat(-3)}, {Rat(-3), Rat(3)}, {Rat(3), Rat(3)}});
  CHECK(ricci_bound_check(big, Rat(1)).status == BoundStatus::Violated);
}
