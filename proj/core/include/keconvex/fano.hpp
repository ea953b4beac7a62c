#pragma once

#include "keconvex/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace keconvex {

enum class BoundStatus { Holds, Equality, Violated };

std::string bound_status_name(BoundStatus s);

/// Outcome of a degree-bound comparison: degree = n! * volume is tested
/// against the stated bound, with optional existence verdict and notes
/// recording which hypotheses were checked.
struct FanoVerdict {
  Rat volume;
  Rat degree;
  Rat bound;
  BoundStatus status = BoundStatus::Holds;
  std::optional<bool> ke_exists;
  std::optional<double> r_max;  // only set by ricci_bound_check
  std::vector<std::string> notes;
};

/// True iff the barycenter is 0 and 0 is the unique interior lattice point.
bool ke_exists_toric(const Polytope& p);

/// Compares Vol(p) against (n+1)^n / n! exactly. Does not test the
/// barycenter hypothesis; callers compose with ke_exists_toric.
FanoVerdict ehrhart_check(const Polytope& p);

struct GrunbaumResult {
  Rat clipped_volume;  // Vol(P_-)
  Rat bound;           // (n/(n+1))^n * Vol(P)
  bool holds = false;
  bool equality = false;
};

/// Clips p by the halfspace through its barycenter on the side the normal
/// points to ({<normal,x> >= <normal,b_P>}) and tests Grunbaum's bound.
GrunbaumResult grunbaum_check(const Polytope& p, const RatVec& normal);

/// Compares degree = n! * Vol(p) against ((n+1)/r)^n for 0 < r <= 1.
/// r_max = (n+1)/degree^{1/n} is reported as a floating-point diagnostic.
FanoVerdict ricci_bound_check(const Polytope& p, const Rat& r);

}  // namespace keconvex
