#include "keconvex/polytope.hpp"

#include "keconvex/errors.hpp"
#include "keconvex/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace keconvex {

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Visits all k-subsets of {0..m-1}; returns false from the visitor to stop.
template <typename F>
void for_each_subset(int m, int k, std::int64_t budget, F&& visit) {
  if (k > m) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::int64_t count = 0;
  while (true) {
    if (++count > budget)
      throw DimensionTooLarge("subset enumeration budget exceeded");
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rat facet_slack(const Facet& f, const RatVec& p) { return dot(f.normal, p) + f.offset; }

/// Kernel direction of an (n-1) x n system of full rank; empty if rank < n-1.
RatVec kernel_direction(const RatMat& rows, int n) {
  // Gaussian elimination to row echelon form, then back-substitute with the
  // free column set to 1.
  RatMat m = rows;
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != n - 1) return {};
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVec d(n, Rat(0));
  d[free_col] = 1;
  for (int r = static_cast<int>(pivot_col.size()) - 1; r >= 0; --r) {
    int pc = pivot_col[r];
    Rat s = m[r][free_col];
    d[pc] = -s / m[r][pc];
  }
  return d;
}

/// True iff the recession cone {d : <n_i, d> >= 0 for all facets} is {0}.
bool recession_cone_trivial(const std::vector<Facet>& facets, int n) {
  RatMat normals;
  normals.reserve(facets.size());
  for (const Facet& f : facets) normals.push_back(to_rat_vec(f.normal));
  if (rank(normals) < n) return false;  // cone contains a line
  if (n == 1) {
    bool pos = false, neg = false;
    for (const Facet& f : facets) {
      if (f.normal[0] > 0) pos = true;
      if (f.normal[0] < 0) neg = true;
    }
    return pos && neg;
  }
  // Pointed cone: nontrivial iff it has an extreme ray, which lies on n-1
  // linearly independent cone facets.
  bool nontrivial = false;
  for_each_subset(static_cast<int>(facets.size()), n - 1, kDefaultLatticeBudget,
                  [&](const std::vector<int>& idx) {
                    if (nontrivial) return;
                    RatMat rows;
                    for (int i : idx) rows.push_back(normals[i]);
                    RatVec d = kernel_direction(rows, n);
                    if (d.empty()) return;
                    for (int sign = 0; sign < 2; ++sign) {
                      bool ok = true;
                      for (const RatVec& nr : normals) {
                        if (dot(nr, d) < 0) {
                          ok = false;
                          break;
                        }
                      }
                      if (ok) {
                        nontrivial = true;
                        return;
                      }
                      for (Rat& x : d) x = -x;
                    }
                  });
  return !nontrivial;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[0].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank(diffs);
}

/// Facets of conv(points) by supporting-plane enumeration over n-subsets.
std::vector<Facet> facets_of_points(const std::vector<RatVec>& pts, int n) {
  std::vector<Facet> out;
  std::set<std::pair<std::vector<std::string>, std::string>> seen;  // normal, offset keys
  for_each_subset(
      static_cast<int>(pts.size()), n, kDefaultLatticeBudget,
      [&](const std::vector<int>& idx) {
        RatMat diffs;
        for (int i = 1; i < n; ++i) {
          RatVec d(n);
          for (int c = 0; c < n; ++c) d[c] = pts[idx[i]][c] - pts[idx[0]][c];
          diffs.push_back(std::move(d));
        }
        RatVec normal;
        if (n == 1) {
          normal = {Rat(1)};
        } else {
          normal = kernel_direction(diffs, n);
          if (normal.empty()) return;  // chosen points not affinely independent
        }
        Rat level = dot(normal, pts[idx[0]]);
        bool above = false, below = false;
        for (const RatVec& p : pts) {
          Rat s = dot(normal, p) - level;
          if (s > 0) above = true;
          if (s < 0) below = true;
          if (above && below) return;  // not supporting
        }
        if (below && !above) {
          for (Rat& x : normal) x = -x;
          level = -level;
        }
        // Halfspace <normal, p> >= level, i.e. offset = -level.
        IntVec prim;
        Rat scale = primitivize(normal, prim);
        Rat offset = -level * scale;
        std::vector<std::string> nk;
        for (const Int& x : prim) nk.push_back(x.str());
        auto key = std::make_pair(nk, rat_to_string(offset));
        if (seen.insert(key).second) out.push_back(Facet{prim, offset});
      });
  return out;
}

std::vector<RatVec> vertices_of_hrep(const HPolytope& h) {
  const int n = h.dim;
  std::vector<RatVec> verts;
  for_each_subset(
      static_cast<int>(h.facets.size()), n, kDefaultLatticeBudget,
      [&](const std::vector<int>& idx) {
        RatMat m;
        RatVec rhs;
        for (int i : idx) {
          m.push_back(to_rat_vec(h.facets[i].normal));
          rhs.push_back(-h.facets[i].offset);
        }
        auto x = solve_linear(m, rhs);
        if (!x) return;
        for (const Facet& f : h.facets) {
          if (facet_slack(f, *x) < 0) return;
        }
        if (std::find(verts.begin(), verts.end(), *x) == verts.end())
          verts.push_back(std::move(*x));
      });
  std::sort(verts.begin(), verts.end(), lex_less);
  return verts;
}

void check_dim_budget(int dim, std::size_t facet_count) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionTooLarge("dimension " + std::to_string(dim) + " outside [1, " +
                            std::to_string(kMaxDim) + "]");
  if (facet_count > kMaxFacets)
    throw DimensionTooLarge("facet count " + std::to_string(facet_count) +
                            " exceeds cap " + std::to_string(kMaxFacets));
}

/// Adjacency: two vertices span an edge iff their common tight facets have
/// normal rank n-1 (n=1: any two vertices of an interval).
std::vector<std::pair<int, int>> polytope_edges(const Polytope& p) {
  const int n = p.dim();
  const auto& verts = p.v().vertices;
  std::vector<std::pair<int, int>> edges;
  if (n == 1) {
    if (verts.size() == 2) edges.emplace_back(0, 1);
    return edges;
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      RatMat common;
      for (const Facet& f : p.h().facets) {
        if (facet_slack(f, verts[i]) == 0 && facet_slack(f, verts[j]) == 0)
          common.push_back(to_rat_vec(f.normal));
      }
      if (!common.empty() && rank(common) == n - 1) edges.emplace_back(i, j);
    }
  }
  return edges;
}

/// Star triangulation of a full-dimensional point set (all points extreme),
/// returned as index tuples into pts. Recurses through facet projections.
std::vector<std::vector<int>> triangulate_points(const std::vector<RatVec>& pts, int n) {
  std::vector<std::vector<int>> out;
  if (n == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.push_back({lo, hi});
    return out;
  }
  int apex = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (lex_less(pts[i], pts[apex])) apex = i;
  for (const Facet& f : facets_of_points(pts, n)) {
    RatVec fn = to_rat_vec(f.normal);
    if (dot(fn, pts[apex]) + f.offset == 0) continue;  // apex on this facet
    std::vector<int> tight;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
      if (dot(fn, pts[i]) + f.offset == 0) tight.push_back(i);
    // Project out a coordinate where the facet normal is nonzero; the
    // projection is injective on the facet hyperplane.
    int drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<RatVec> proj;
    proj.reserve(tight.size());
    for (int i : tight) {
      RatVec q;
      q.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != drop) q.push_back(pts[i][c]);
      proj.push_back(std::move(q));
    }
    for (const auto& sub : triangulate_points(proj, n - 1)) {
      std::vector<int> simplex{apex};
      for (int k : sub) simplex.push_back(tight[k]);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Rat simplex_volume(const std::vector<RatVec>& simplex, int n) {
  RatMat diffs;
  for (int i = 1; i <= n; ++i) {
    RatVec d(n);
    for (int c = 0; c < n; ++c) d[c] = simplex[i][c] - simplex[0][c];
    diffs.push_back(std::move(d));
  }
  Rat dv = det(diffs);
  if (dv < 0) dv = -dv;
  return dv / Rat(factorial(n));
}

}  // namespace

RatVec AffineMap::apply(const RatVec& p) const {
  RatVec out = mat_vec(matrix, p);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation[i];
  return out;
}

HPolytope normalize_hrep(const std::vector<RawFacet>& raw, int dim) {
  check_dim_budget(dim, raw.size());
  // Primitivize and merge duplicate directions keeping the tighter offset.
  std::map<std::vector<std::string>, Facet> by_normal;
  for (const RawFacet& rf : raw) {
    if (static_cast<int>(rf.normal.size()) != dim)
      throw DegenerateInput("facet normal has wrong length");
    IntVec prim;
    Rat scale = primitivize(rf.normal, prim);
    Rat offset = rf.offset * scale;
    std::vector<std::string> key;
    for (const Int& x : prim) key.push_back(x.str());
    auto it = by_normal.find(key);
    if (it == by_normal.end())
      by_normal.emplace(key, Facet{prim, offset});
    else if (offset < it->second.offset)
      it->second.offset = offset;  // smaller offset = tighter halfspace
  }
  HPolytope h;
  h.dim = dim;
  for (auto& [key, f] : by_normal) h.facets.push_back(std::move(f));
  std::sort(h.facets.begin(), h.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less_int(a.normal, b.normal);
    return a.offset < b.offset;
  });
  check_dim_budget(dim, h.facets.size());

  if (!recession_cone_trivial(h.facets, dim))
    throw EmptyOrUnbounded("halfspace intersection is unbounded");
  std::vector<RatVec> verts = vertices_of_hrep(h);
  if (verts.empty()) throw EmptyOrUnbounded("halfspace intersection is empty");
  if (affine_rank(verts) < dim)
    throw EmptyOrUnbounded("halfspace intersection is lower-dimensional");

  // Drop redundant halfspaces: a facet's tight vertex set must be (n-1)-dim.
  std::vector<Facet> kept;
  for (const Facet& f : h.facets) {
    std::vector<RatVec> tight;
    for (const RatVec& v : verts)
      if (facet_slack(f, v) == 0) tight.push_back(v);
    if (static_cast<int>(tight.size()) >= dim && affine_rank(tight) == dim - 1)
      kept.push_back(f);
  }
  h.facets = std::move(kept);
  return h;
}

VPolytope h_to_v(const HPolytope& h) {
  check_dim_budget(h.dim, h.facets.size());
  VPolytope v;
  v.dim = h.dim;
  v.vertices = vertices_of_hrep(h);
  if (v.vertices.empty()) throw EmptyOrUnbounded("no vertices found");
  return v;
}

HPolytope v_to_h(const VPolytope& v) {
  if (v.dim < 1 || v.dim > kMaxDim)
    throw DimensionTooLarge("dimension outside supported range");
  if (affine_rank(v.vertices) < v.dim)
    throw DegenerateInput("point set is not full-dimensional");
  HPolytope h;
  h.dim = v.dim;
  h.facets = facets_of_points(v.vertices, v.dim);
  std::sort(h.facets.begin(), h.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less_int(a.normal, b.normal);
    return a.offset < b.offset;
  });
  check_dim_budget(h.dim, h.facets.size());
  return h;
}

Polytope Polytope::from_hrep(const HPolytope& h) {
  std::vector<RawFacet> raw;
  for (const Facet& f : h.facets) raw.push_back(RawFacet{to_rat_vec(f.normal), f.offset});
  Polytope p;
  p.h_ = normalize_hrep(raw, h.dim);
  p.v_ = h_to_v(p.h_);
  return p;
}

Polytope Polytope::from_vertices(int dim, const std::vector<RatVec>& points) {
  VPolytope raw;
  raw.dim = dim;
  raw.vertices = points;
  Polytope p;
  p.h_ = v_to_h(raw);
  p.v_ = h_to_v(p.h_);  // drops non-extreme input points
  return p;
}

bool Polytope::contains(const RatVec& p) const {
  for (const Facet& f : h_.facets)
    if (facet_slack(f, p) < 0) return false;
  return true;
}

bool Polytope::strictly_contains(const RatVec& p) const {
  for (const Facet& f : h_.facets)
    if (facet_slack(f, p) <= 0) return false;
  return true;
}

std::vector<std::vector<RatVec>> triangulate(const Polytope& p) {
  const auto& verts = p.v().vertices;
  std::vector<std::vector<RatVec>> out;
  for (const auto& idx : triangulate_points(verts, p.dim())) {
    std::vector<RatVec> s;
    for (int i : idx) s.push_back(verts[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::pair<Rat, RatVec> volume_and_barycenter(const Polytope& p) {
  const int n = p.dim();
  Rat vol = 0;
  RatVec moment(n, Rat(0));
  for (const auto& s : triangulate(p)) {
    Rat sv = simplex_volume(s, n);
    vol += sv;
    for (int c = 0; c < n; ++c) {
      Rat avg = 0;
      for (const RatVec& v : s) avg += v[c];
      moment[c] += sv * avg / Rat(n + 1);
    }
  }
  if (vol == 0) throw DegenerateInput("zero-volume polytope");
  for (Rat& m : moment) m /= vol;
  return {vol, moment};
}

std::vector<IntVec> interior_lattice_points(const Polytope& p, std::int64_t budget) {
  const int n = p.dim();
  std::vector<Int> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    Rat mn = p.v().vertices[0][c], mx = mn;
    for (const RatVec& v : p.v().vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = rat_ceil(mn);
    hi[c] = rat_floor(mx);
  }
  Int candidates = 1;
  for (int c = 0; c < n; ++c) {
    Int width = hi[c] - lo[c] + 1;
    if (width <= 0) return {};
    candidates *= width;
    if (candidates > budget)
      throw BudgetExceeded("bounding box holds more than " + std::to_string(budget) +
                           " lattice candidates");
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  while (true) {
    RatVec q(n);
    for (int c = 0; c < n; ++c) q[c] = Rat(cur[c]);
    if (p.strictly_contains(q)) out.push_back(cur);
    int c = n - 1;
    while (c >= 0 && cur[c] == hi[c]) {
      cur[c] = lo[c];
      --c;
    }
    if (c < 0) break;
    ++cur[c];
  }
  return out;
}

Polytope polar_dual(const Polytope& p) {
  RatVec zero(p.dim(), Rat(0));
  if (!p.strictly_contains(zero))
    throw OriginNotInterior("polar dual requires the origin strictly inside");
  std::vector<RawFacet> raw;
  for (const RatVec& v : p.v().vertices) raw.push_back(RawFacet{v, Rat(1)});
  return Polytope::from_hrep([&] {
    HPolytope h;
    h.dim = p.dim();
    for (const RawFacet& rf : raw) {
      IntVec prim;
      Rat scale = primitivize(rf.normal, prim);
      h.facets.push_back(Facet{prim, rf.offset * scale});
    }
    return h;
  }());
}

bool is_lattice_polytope(const Polytope& p) {
  for (const RatVec& v : p.v().vertices)
    for (const Rat& x : v)
      if (rat_den(x) != 1) return false;
  return true;
}

bool is_reflexive(const Polytope& p) {
  RatVec zero(p.dim(), Rat(0));
  if (!p.strictly_contains(zero)) return false;
  if (!is_lattice_polytope(p)) return false;
  return is_lattice_polytope(polar_dual(p));
}

bool is_delzant(const Polytope& p) {
  const int n = p.dim();
  const auto& verts = p.v().vertices;
  auto edges = polytope_edges(p);
  std::vector<std::vector<int>> nbr(verts.size());
  for (auto [i, j] : edges) {
    nbr[i].push_back(j);
    nbr[j].push_back(i);
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    // Simplicity: exactly n tight facets and n edges at each vertex.
    int tight = 0;
    for (const Facet& f : p.h().facets)
      if (facet_slack(f, verts[i]) == 0) ++tight;
    if (tight != n || static_cast<int>(nbr[i].size()) != n) return false;
    RatMat dirs;
    for (int j : nbr[i]) {
      RatVec d(n);
      for (int c = 0; c < n; ++c) d[c] = verts[j][c] - verts[i][c];
      IntVec prim;
      primitivize(d, prim);
      dirs.push_back(to_rat_vec(prim));
    }
    Rat dv = det(dirs);
    if (dv != 1 && dv != -1) return false;
  }
  return true;
}

std::pair<Polytope, AffineMap> affine_normalize(const Polytope& p) {
  const int n = p.dim();
  auto [vol, bary] = volume_and_barycenter(p);
  // Candidate vertices in lexicographic order; facets at each tried in
  // lexicographic normal order, greedily keeping independent ones.
  std::vector<int> order(p.v().vertices.size());
  std::iota(order.begin(), order.end(), 0);
  // Vertices are already sorted lexicographically by construction.
  for (int vi : order) {
    const RatVec& v0 = p.v().vertices[vi];
    std::vector<const Facet*> tight;
    for (const Facet& f : p.h().facets)
      if (facet_slack(f, v0) == 0) tight.push_back(&f);
    std::sort(tight.begin(), tight.end(), [](const Facet* a, const Facet* b) {
      return lex_less_int(a->normal, b->normal);
    });
    std::vector<const Facet*> chosen;
    RatMat rows;
    for (const Facet* f : tight) {
      RatMat trial = rows;
      trial.push_back(to_rat_vec(f->normal));
      if (rank(trial) == static_cast<int>(trial.size())) {
        rows = std::move(trial);
        chosen.push_back(f);
        if (static_cast<int>(chosen.size()) == n) break;
      }
    }
    if (static_cast<int>(chosen.size()) < n) continue;
    AffineMap map;
    map.matrix = rat_mat(n, n);
    map.translation.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      Rat denom = dot(chosen[i]->normal, bary) + chosen[i]->offset;
      for (int c = 0; c < n; ++c) map.matrix[i][c] = Rat(chosen[i]->normal[c]) / denom;
      map.translation[i] = chosen[i]->offset / denom;
    }
    Rat dv = det(map.matrix);
    map.det_abs = dv < 0 ? -dv : dv;
    std::vector<RatVec> image;
    for (const RatVec& v : p.v().vertices) image.push_back(map.apply(v));
    return {Polytope::from_vertices(n, image), std::move(map)};
  }
  throw DegenerateVertexCone("no vertex has n independent tight facets");
}

Polytope clip_halfspace(const Polytope& p, const RatVec& normal, const Rat& bound) {
  const int n = p.dim();
  const auto& verts = p.v().vertices;
  std::vector<RatVec> pts;
  for (const RatVec& v : verts)
    if (dot(normal, v) <= bound) pts.push_back(v);
  if (pts.empty()) throw EmptyIntersection("clip halfspace misses the polytope");
  for (auto [i, j] : polytope_edges(p)) {
    Rat si = dot(normal, verts[i]) - bound;
    Rat sj = dot(normal, verts[j]) - bound;
    if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
      Rat t = si / (si - sj);
      RatVec x(n);
      for (int c = 0; c < n; ++c) x[c] = verts[i][c] + t * (verts[j][c] - verts[i][c]);
      pts.push_back(std::move(x));
    }
  }
  if (affine_rank(pts) < n)
    throw EmptyIntersection("clip halfspace does not meet the interior");
  return Polytope::from_vertices(n, pts);
}

}  // namespace keconvex
