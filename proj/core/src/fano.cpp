#include "keconvex/fano.hpp"

#include "keconvex/errors.hpp"

#include <cmath>

namespace keconvex {

namespace {

BoundStatus compare(const Rat& value, const Rat& bound) {
  if (value == bound) return BoundStatus::Equality;
  return value < bound ? BoundStatus::Holds : BoundStatus::Violated;
}

}  // namespace

std::string bound_status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Equality: return "equality";
    case BoundStatus::Violated: return "violated";
  }
  return "unknown";
}

bool ke_exists_toric(const Polytope& p) {
  const int n = p.dim();
  RatVec zero(n, Rat(0));
  if (!p.strictly_contains(zero))
    throw OriginNotInterior("criterion requires the origin strictly inside");
  auto [vol, bary] = volume_and_barycenter(p);
  for (const Rat& b : bary)
    if (b != 0) return false;
  auto pts = interior_lattice_points(p);
  return pts.size() == 1 && pts[0] == IntVec(n, Int(0));
}

FanoVerdict ehrhart_check(const Polytope& p) {
  const int n = p.dim();
  FanoVerdict v;
  auto [vol, bary] = volume_and_barycenter(p);
  v.volume = vol;
  v.degree = vol * Rat(factorial(n));
  v.bound = rat_pow(Rat(n + 1), n) / Rat(factorial(n));
  v.status = compare(v.volume, v.bound);
  // Record hypothesis diagnostics; the bound itself is hypothesis-free.
  bool all_small_offsets = true;
  for (const Facet& f : p.h().facets)
    if (f.offset > 1) all_small_offsets = false;
  if (!all_small_offsets) v.notes.push_back("some facet offset a_F exceeds 1");
  bool bary_zero = true;
  for (const Rat& b : bary)
    if (b != 0) bary_zero = false;
  if (!bary_zero) v.notes.push_back("barycenter is not the origin");
  return v;
}

GrunbaumResult grunbaum_check(const Polytope& p, const RatVec& normal) {
  const int n = p.dim();
  bool nonzero = false;
  for (const Rat& x : normal)
    if (x != 0) nonzero = true;
  if (!nonzero) throw InvalidParameter("direction must be nonzero");
  auto [vol, bary] = volume_and_barycenter(p);
  Rat level = dot(normal, bary);
  // Clip to {<normal,x> >= level}: negate to fit the <= clip primitive.
  RatVec neg(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
  Polytope minus = clip_halfspace(p, neg, -level);
  GrunbaumResult r;
  r.clipped_volume = volume_and_barycenter(minus).first;
  r.bound = rat_pow(Rat(n, n + 1), n) * vol;
  r.holds = r.clipped_volume >= r.bound;
  r.equality = r.clipped_volume == r.bound;
  return r;
}

FanoVerdict ricci_bound_check(const Polytope& p, const Rat& r) {
  if (r <= 0 || r > 1) throw InvalidParameter("r must lie in (0, 1]");
  const int n = p.dim();
  FanoVerdict v;
  auto [vol, bary] = volume_and_barycenter(p);
  v.volume = vol;
  v.degree = vol * Rat(factorial(n));
  v.bound = rat_pow(Rat(n + 1) / r, n);
  v.status = compare(v.degree, v.bound);
  double deg = static_cast<double>(v.degree);
  v.r_max = (n + 1) / std::pow(deg, 1.0 / n);
  return v;
}

}  // namespace keconvex
