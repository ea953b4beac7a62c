#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <keconvex/errors.hpp>
#include <keconvex/polytope.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace keconvex;
using testutil::random_direction;
using testutil::random_positive_polytope;

namespace {

std::vector<RatVec> sorted_vertices(const Polytope& p) {
  auto v = p.v().vertices;
  std::sort(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return v;
}

}  // namespace

TEST_CASE("triangle fixture: exact volume, barycenter, classification") {
  auto p = Polytope::from_vertices(
      2, {{Rat(-1), Rat(-1)}, {Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}});
  auto [vol, bary] = volume_and_barycenter(p);
  CHECK(vol == Rat(9, 2));
  CHECK(bary == RatVec{Rat(0), Rat(0)});
  CHECK(is_lattice_polytope(p));
  CHECK(is_reflexive(p));
  CHECK(is_delzant(p));
  CHECK(p.h().facets.size() == 3);
  CHECK(interior_lattice_points(p).size() == 1);
}

TEST_CASE("H <-> V round trip on random polytopes") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + static_cast<int>(trial % 3 == 0);  // mostly 2-D, some 3-D
    auto p = random_positive_polytope(rng, dim, dim + 4);
    auto q = Polytope::from_hrep(p.h());
    CHECK(sorted_vertices(p) == sorted_vertices(q));
    auto r = Polytope::from_vertices(dim, p.v().vertices);
    CHECK(sorted_vertices(p) == sorted_vertices(r));
  }
}

TEST_CASE("volume invariances: translation, permutation, scaling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_positive_polytope(rng, 2, 6);
    Rat vol = volume_and_barycenter(p).first;

    std::vector<RatVec> shifted, swapped, scaled;
    for (const RatVec& v : p.v().vertices) {
      shifted.push_back({v[0] + 3, v[1] - 2});
      swapped.push_back({v[1], v[0]});
      scaled.push_back({v[0] * 3, v[1] * 3});
    }
    CHECK(volume_and_barycenter(Polytope::from_vertices(2, shifted)).first == vol);
    CHECK(volume_and_barycenter(Polytope::from_vertices(2, swapped)).first == vol);
    CHECK(volume_and_barycenter(Polytope::from_vertices(2, scaled)).first == vol * 9);
  }
}

TEST_CASE("triangulation volumes sum to the total") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    auto p = random_positive_polytope(rng, 2, 7);
    Rat vol = volume_and_barycenter(p).first;
    Rat sum = 0;
    for (const auto& simplex : triangulate(p)) {
      // 2x2 determinant of edge vectors, halved.
      RatVec a = {simplex[1][0] - simplex[0][0], simplex[1][1] - simplex[0][1]};
      RatVec b = {simplex[2][0] - simplex[0][0], simplex[2][1] - simplex[0][1]};
      Rat d = a[0] * b[1] - a[1] * b[0];
      sum += (d < 0 ? -d : d) / 2;
    }
    CHECK(sum == vol);
  }
}

TEST_CASE("clip additivity: both sides of a plane partition the volume") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_positive_polytope(rng, 2, 6);
    auto [vol, bary] = volume_and_barycenter(p);
    RatVec d = random_direction(rng, 2);
    Rat bound = dot(d, bary);
    RatVec neg = {-d[0], -d[1]};
    Rat lower = volume_and_barycenter(clip_halfspace(p, d, bound)).first;
    Rat upper = volume_and_barycenter(clip_halfspace(p, neg, -bound)).first;
    CHECK(lower + upper == vol);
  }
}

TEST_CASE("clipping to a supporting halfspace is the identity") {
  auto p = Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}});
  auto q = clip_halfspace(p, {Rat(1), Rat(1)}, Rat(2));
  CHECK(volume_and_barycenter(q).first == Rat(2));
  CHECK_THROWS_AS(clip_halfspace(p, {Rat(1), Rat(0)}, Rat(-1)), EmptyIntersection);
}

TEST_CASE("polar duality is an involution on the reflexive corpus") {
  for (const auto& p : testutil::reflexive_corpus()) {
    CHECK(is_reflexive(p));
    auto d = polar_dual(p);
    CHECK(is_lattice_polytope(d));
    CHECK(sorted_vertices(polar_dual(d)) == sorted_vertices(p));
  }
}

TEST_CASE("non-reflexive examples are rejected") {
  // 2 * (unit square centred at origin) has dual with non-integer vertices.
  auto big = Polytope::from_vertices(
      2, {{Rat(-2), Rat(-2)}, {Rat(2), Rat(-2)}, {Rat(-2), Rat(2)}, {Rat(2), Rat(2)}});
  CHECK(!is_reflexive(big));
  // Rational, non-lattice polytope.
  auto frac = Polytope::from_vertices(
      2, {{Rat(-1, 2), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(!is_lattice_polytope(frac));
  CHECK(!is_reflexive(frac));
}

TEST_CASE("delzant detection: smooth vs singular vertex cones") {
  // Simplex for weighted projective space P(1,1,2): singular at one vertex.
  auto p112 = Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(!is_delzant(p112));
  CHECK(is_delzant(Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}})));
  CHECK(!is_delzant(Polytope::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1)}})));
}

TEST_CASE("affine normalization: positive octant, unit barycenter") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_positive_polytope(rng, 2, 6);
    auto [q, map] = affine_normalize(p);
    auto [vol, bary] = volume_and_barycenter(q);
    CHECK(bary == RatVec{Rat(1), Rat(1)});
    for (const RatVec& v : q.v().vertices) {
      CHECK(v[0] >= 0);
      CHECK(v[1] >= 0);
    }
    // Change of variables: the map determinant carries the volume.
    CHECK(vol == map.det_abs * volume_and_barycenter(p).first);
    // The map really sends P to Q.
    for (const RatVec& v : p.v().vertices)
      CHECK(q.contains(map.apply(v)));
  }
}

TEST_CASE("interior lattice points: fixtures and order") {
  auto square = Polytope::from_vertices(
      2, {{Rat(-2), Rat(-2)}, {Rat(2), Rat(-2)}, {Rat(-2), Rat(2)}, {Rat(2), Rat(2)}});
  auto pts = interior_lattice_points(square);
  CHECK(pts.size() == 9);
  CHECK(pts.front() == IntVec{-1, -1});
  CHECK(pts.back() == IntVec{1, 1});
  CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("degenerate and oversized inputs fail loudly") {
  CHECK_THROWS_AS(Polytope::from_vertices(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}),
                  DegenerateInput);
  HPolytope open_strip;
  open_strip.dim = 2;
  open_strip.facets.push_back({IntVec{1, 0}, Rat(1)});
  open_strip.facets.push_back({IntVec{-1, 0}, Rat(1)});
  CHECK_THROWS_AS(Polytope::from_hrep(open_strip), EmptyOrUnbounded);
}
