#pragma once

#include "keconvex/fano.hpp"
#include "keconvex/polytope.hpp"

#include <string>
#include <vector>

namespace keconvex {

enum class Family { A, B, C, D, G2 };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Root system in an explicit rational realization so that pairings are
/// plain dot products. A_r lives in the sum-zero hyperplane of R^{r+1};
/// B/C/D in R^r; G2 in the sum-zero hyperplane of R^3 (the smallest
/// realization with rational coordinates).
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  int ambient = 0;  // dimension of the ambient coordinate space
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> positive_roots;
  RatVec rho;  // half-sum of positive roots
  /// Fundamental weights: 2<w_i, a_j>/<a_j, a_j> = delta_ij, in the span of
  /// the simple roots.
  std::vector<RatVec> fundamental_weights;
};

RootSystem build_root_system(Family family, int rank);

/// Converts fundamental-weight coordinates to the ambient realization.
RatVec weight_to_ambient(const RootSystem& rs, const RatVec& omega_coords);

/// Inverse of weight_to_ambient on the span of the simple roots.
RatVec ambient_to_weight(const RootSystem& rs, const RatVec& ambient);

/// Positive roots with a nonzero coefficient on some simple root outside S.
struct ParabolicSubset {
  std::vector<int> S;  // retained simple-root indices, 0-based
  std::vector<RatVec> r_x_plus;
};

ParabolicSubset parabolic_subset(const RootSystem& rs, const std::vector<int>& S);

/// Sum of the roots in r_x_plus (ambient coordinates).
RatVec anticanonical_weight(const ParabolicSubset& ps);

/// Weyl degree n! * prod_{a in R_X^+} <a,lambda>/<a,rho>, n = |R_X^+|.
/// lambda in ambient coordinates. Throws NotAmple if some pairing <= 0.
Rat flag_degree(const RootSystem& rs, const ParabolicSubset& ps, const RatVec& lambda);

struct SnowCase {
  Family family;
  int rank;
  std::vector<int> S;
  int n;  // |R_X^+|
  Rat degree;
  Rat bound;  // (n+1)^n
  bool equality = false;
  bool violated = false;
};

struct SnowReport {
  std::vector<SnowCase> cases;
  int violations = 0;
  int equalities = 0;
};

/// Enumerates every (family, rank <= max_rank, parabolic S) with nonempty
/// R_X^+ over A/B/C/D (valid ranks) and G2, and tests degree <= (n+1)^n.
SnowReport snow_scan(int max_rank);

/// Exact integral over the simplex of the barycentric monomial
/// prod lambda_i^{a_i}: n! * Vol * prod a_i! / (n + |a|)!.
Rat integrate_monomial_simplex(const std::vector<RatVec>& simplex,
                               const std::vector<int>& exponents);

/// Exact integral over p of the coordinate monomial prod x_i^{a_i}.
Rat polytope_monomial_integral(const Polytope& p, const std::vector<int>& powers);

/// Exact integral over p of prod_k (<coeffs[k], x> + consts[k]).
Rat polytope_linear_form_integral(const Polytope& p,
                                  const std::vector<RatVec>& coeffs,
                                  const std::vector<Rat>& consts);

/// Duistermaat-Heckman density prod <a,p>/<a,rho> over positive roots with
/// strictly positive pairing; empty product = 1. p in ambient coordinates.
Rat dh_density(const RootSystem& rs, const RatVec& p_ambient);

/// Exact integral of the DH density over a polytope given in
/// fundamental-weight coordinates (lattice-normalized Lebesgue measure).
/// Throws ChamberViolation unless every vertex pairs strictly positively
/// with every positive root.
Rat dh_integrate(const RootSystem& rs, const Polytope& p_weight_coords);

struct HoroReport {
  Rat dh_mass;                 // integral of v over P
  RatVec dh_barycenter;        // b_v in weight coordinates
  RatVec root_sum;             // sum of positive roots in weight coordinates
  bool ke_candidate = false;   // b_v == root_sum
  int n = 0;                   // dim P + |R^+|
  Rat bound;                   // (n+1)^n / n!
  BoundStatus bound_status = BoundStatus::Holds;
  bool is_delzant = false;
  std::vector<std::string> notes;
};

/// Horospherical Kaehler-Einstein criterion: weighted barycenter vs the sum
/// of positive roots, plus the degree bound with n = dim P + |R^+|.
HoroReport horospherical_check(const RootSystem& rs, const Polytope& p_weight_coords);

}  // namespace keconvex
