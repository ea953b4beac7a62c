#pragma once

#include "keconvex/linalg.hpp"
#include "keconvex/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace keconvex {

// Enumeration budgets. Everything here is brute force over subsets, which is
// fine at desk scale but must fail loudly beyond it.
inline constexpr int kMaxDim = 6;
inline constexpr int kMaxFacets = 30;
inline constexpr std::int64_t kDefaultLatticeBudget = 2'000'000;

/// Halfspace <normal, p> >= -offset with a primitive integer normal.
struct Facet {
  IntVec normal;
  Rat offset;
};

/// Intersection of halfspaces; bounded and full-dimensional by construction.
struct HPolytope {
  int dim = 0;
  std::vector<Facet> facets;
};

struct VPolytope {
  int dim = 0;
  std::vector<RatVec> vertices;
};

/// Consistent pair of representations, built together and kept immutable.
class Polytope {
 public:
  static Polytope from_hrep(const HPolytope& h);
  static Polytope from_vertices(int dim, const std::vector<RatVec>& points);

  const HPolytope& h() const { return h_; }
  const VPolytope& v() const { return v_; }
  int dim() const { return h_.dim; }

  bool contains(const RatVec& p) const;
  bool strictly_contains(const RatVec& p) const;

 private:
  Polytope() = default;
  HPolytope h_;
  VPolytope v_;
};

/// p |-> matrix * p + translation.
struct AffineMap {
  RatMat matrix;
  RatVec translation;
  Rat det_abs;

  RatVec apply(const RatVec& p) const;
};

/// Raw halfspace before normalization; the normal may be rational.
struct RawFacet {
  RatVec normal;
  Rat offset;
};

/// Primitivizes normals, merges duplicate halfspaces keeping the tighter
/// offset, and validates that the intersection is a bounded full-dimensional
/// polytope. Redundant (non-facet) halfspaces are dropped.
HPolytope normalize_hrep(const std::vector<RawFacet>& raw, int dim);

/// Vertex enumeration over n-subsets of facets.
VPolytope h_to_v(const HPolytope& h);

/// Facet enumeration over n-subsets of vertices with a supporting-plane test.
HPolytope v_to_h(const VPolytope& v);

/// Exact (volume, barycenter) by star triangulation from the lexicographically
/// smallest vertex.
std::pair<Rat, RatVec> volume_and_barycenter(const Polytope& p);

/// Star triangulation used for volume/moments; each simplex is dim+1 vertices.
std::vector<std::vector<RatVec>> triangulate(const Polytope& p);

/// All lattice points strictly inside p, in lexicographic order.
std::vector<IntVec> interior_lattice_points(
    const Polytope& p, std::int64_t budget = kDefaultLatticeBudget);

/// Polar dual {y : <v, y> >= -1 for all vertices v}; requires 0 interior.
Polytope polar_dual(const Polytope& p);

bool is_lattice_polytope(const Polytope& p);

/// Lattice polytope with 0 interior whose polar dual is again lattice.
bool is_reflexive(const Polytope& p);

/// Simple polytope whose primitive vertex edge directions form a lattice
/// basis at every vertex.
bool is_delzant(const Polytope& p);

/// The affine renormalization P' = alpha(P): picks the lexicographically
/// smallest vertex, n independent facets through it (lexicographic
/// tie-break), and maps p |-> (alpha_i(p) / alpha_i(b_P))_i. The image lies
/// in the positive octant with barycenter (1,...,1).
std::pair<Polytope, AffineMap> affine_normalize(const Polytope& p);

/// Exact intersection with {<normal, x> <= bound}.
Polytope clip_halfspace(const Polytope& p, const RatVec& normal, const Rat& bound);

}  // namespace keconvex
