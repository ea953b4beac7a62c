#include "keconvex/lie.hpp"

#include "keconvex/errors.hpp"
#include "keconvex/linalg.hpp"

#include <algorithm>
#include <map>

namespace keconvex {

namespace {

RatVec basis_vec(int dim, int i, const Rat& value) {
  RatVec v(dim, Rat(0));
  v[i] = value;
  return v;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Gram matrix of the simple roots.
RatMat simple_gram(const RootSystem& rs) {
  const int r = rs.rank;
  RatMat g = rat_mat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  return g;
}

/// Coefficients of an ambient vector (in the root span) over simple roots.
RatVec simple_coefficients(const RootSystem& rs, const RatVec& v) {
  const int r = rs.rank;
  RatVec rhs(r);
  for (int i = 0; i < r; ++i) rhs[i] = dot(rs.simple_roots[i], v);
  auto c = solve_linear(simple_gram(rs), rhs);
  if (!c) throw DegenerateInput("simple roots are not independent");
  return *c;
}

Rat simplex_volume_local(const std::vector<RatVec>& simplex) {
  const int n = static_cast<int>(simplex.size()) - 1;
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

/// Expands a product of barycentric linear forms sum_i coef[k][i] lambda_i
/// into a map exponent-vector -> coefficient.
std::map<std::vector<int>, Rat> expand_forms(const std::vector<RatVec>& bary_forms,
                                             int n_plus_1) {
  std::map<std::vector<int>, Rat> terms;
  terms[std::vector<int>(n_plus_1, 0)] = 1;
  for (const RatVec& form : bary_forms) {
    std::map<std::vector<int>, Rat> next;
    for (const auto& [expo, coef] : terms) {
      for (int i = 0; i < n_plus_1; ++i) {
        if (form[i] == 0) continue;
        std::vector<int> e = expo;
        ++e[i];
        next[e] += coef * form[i];
      }
    }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "G2" || s == "g2" || s == "G" || s == "g") return Family::G2;
  throw UnsupportedType("unknown root-system family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  switch (family) {
    case Family::A: {
      if (rank < 1) throw UnsupportedType("A_r needs rank >= 1");
      rs.ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RatVec a(rs.ambient, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      for (int i = 0; i < rs.ambient; ++i)
        for (int j = i + 1; j < rs.ambient; ++j) {
          RatVec a(rs.ambient, Rat(0));
          a[i] = 1;
          a[j] = -1;
          rs.positive_roots.push_back(a);
        }
      break;
    }
    case Family::B: {
      if (rank < 2) throw UnsupportedType("B_r needs rank >= 2");
      rs.ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(rank, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      rs.simple_roots.push_back(basis_vec(rank, rank - 1, Rat(1)));
      for (int i = 0; i < rank; ++i)
        rs.positive_roots.push_back(basis_vec(rank, i, Rat(1)));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          RatVec a(rank, Rat(0)), b(rank, Rat(0));
          a[i] = 1;
          a[j] = -1;
          b[i] = 1;
          b[j] = 1;
          rs.positive_roots.push_back(a);
          rs.positive_roots.push_back(b);
        }
      break;
    }
    case Family::C: {
      if (rank < 2) throw UnsupportedType("C_r needs rank >= 2");
      rs.ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(rank, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      rs.simple_roots.push_back(basis_vec(rank, rank - 1, Rat(2)));
      for (int i = 0; i < rank; ++i)
        rs.positive_roots.push_back(basis_vec(rank, i, Rat(2)));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          RatVec a(rank, Rat(0)), b(rank, Rat(0));
          a[i] = 1;
          a[j] = -1;
          b[i] = 1;
          b[j] = 1;
          rs.positive_roots.push_back(a);
          rs.positive_roots.push_back(b);
        }
      break;
    }
    case Family::D: {
      if (rank < 3) throw UnsupportedType("D_r needs rank >= 3");
      rs.ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec a(rank, Rat(0));
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple_roots.push_back(a);
      }
      RatVec last(rank, Rat(0));
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      rs.simple_roots.push_back(last);
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          RatVec a(rank, Rat(0)), b(rank, Rat(0));
          a[i] = 1;
          a[j] = -1;
          b[i] = 1;
          b[j] = 1;
          rs.positive_roots.push_back(a);
          rs.positive_roots.push_back(b);
        }
      break;
    }
    case Family::G2: {
      if (rank != 2) throw UnsupportedType("G2 has rank 2");
      // Sum-zero realization in R^3: short roots have norm^2 = 2, long 6.
      rs.ambient = 3;
      RatVec a1{Rat(1), Rat(-1), Rat(0)};
      RatVec a2{Rat(-2), Rat(1), Rat(1)};
      rs.simple_roots = {a1, a2};
      rs.positive_roots = {a1,
                           a2,
                           add(a1, a2),                  // (-1, 0, 1)
                           add(add(a1, a1), a2),         // (0, -1, 1)
                           add(add(add(a1, a1), a1), a2),       // (1, -2, 1)
                           add(add(add(add(a1, a1), a1), a2), a2)};  // (-1, -1, 2)
      break;
    }
  }
  rs.rho.assign(rs.ambient, Rat(0));
  for (const RatVec& a : rs.positive_roots)
    for (int c = 0; c < rs.ambient; ++c) rs.rho[c] += a[c] / 2;
  // Fundamental weights from the Gram system <w_i, a_j> = delta_ij |a_j|^2/2.
  RatMat gram = simple_gram(rs);
  for (int i = 0; i < rs.rank; ++i) {
    RatVec rhs(rs.rank, Rat(0));
    rhs[i] = gram[i][i] / 2;
    auto c = solve_linear(gram, rhs);
    if (!c) throw DegenerateInput("degenerate simple-root Gram matrix");
    RatVec w(rs.ambient, Rat(0));
    for (int j = 0; j < rs.rank; ++j)
      for (int k = 0; k < rs.ambient; ++k) w[k] += (*c)[j] * rs.simple_roots[j][k];
    rs.fundamental_weights.push_back(std::move(w));
  }
  return rs;
}

RatVec weight_to_ambient(const RootSystem& rs, const RatVec& omega_coords) {
  if (static_cast<int>(omega_coords.size()) != rs.rank)
    throw DegenerateInput("weight coordinate vector has wrong length");
  RatVec out(rs.ambient, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.ambient; ++k)
      out[k] += omega_coords[i] * rs.fundamental_weights[i][k];
  return out;
}

RatVec ambient_to_weight(const RootSystem& rs, const RatVec& ambient) {
  RatVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out[i] = 2 * dot(rs.simple_roots[i], ambient) /
             dot(rs.simple_roots[i], rs.simple_roots[i]);
  return out;
}

ParabolicSubset parabolic_subset(const RootSystem& rs, const std::vector<int>& S) {
  ParabolicSubset ps;
  ps.S = S;
  std::sort(ps.S.begin(), ps.S.end());
  std::vector<bool> in_s(rs.rank, false);
  for (int i : ps.S) {
    if (i < 0 || i >= rs.rank) throw InvalidParameter("simple-root index out of range");
    in_s[i] = true;
  }
  for (const RatVec& a : rs.positive_roots) {
    RatVec coef = simple_coefficients(rs, a);
    bool outside = false;
    for (int j = 0; j < rs.rank; ++j)
      if (!in_s[j] && coef[j] != 0) outside = true;
    if (outside) ps.r_x_plus.push_back(a);
  }
  return ps;
}

RatVec anticanonical_weight(const ParabolicSubset& ps) {
  if (ps.r_x_plus.empty()) return {};
  RatVec sum(ps.r_x_plus[0].size(), Rat(0));
  for (const RatVec& a : ps.r_x_plus) sum = add(sum, a);
  return sum;
}

Rat flag_degree(const RootSystem& rs, const ParabolicSubset& ps, const RatVec& lambda) {
  const int n = static_cast<int>(ps.r_x_plus.size());
  Rat prod = Rat(factorial(n));
  for (const RatVec& a : ps.r_x_plus) {
    Rat num = dot(a, lambda);
    if (num <= 0) throw NotAmple("pairing <alpha, lambda> is not positive");
    prod *= num / dot(a, rs.rho);
  }
  return prod;
}

SnowReport snow_scan(int max_rank) {
  if (max_rank > 4) throw InvalidParameter("snow_scan caps at rank 4");
  SnowReport rep;
  std::vector<std::pair<Family, int>> systems;
  for (int r = 1; r <= max_rank; ++r) systems.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) systems.emplace_back(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) systems.emplace_back(Family::C, r);
  for (int r = 3; r <= max_rank; ++r) systems.emplace_back(Family::D, r);
  if (max_rank >= 2) systems.emplace_back(Family::G2, 2);
  for (auto [fam, r] : systems) {
    RootSystem rs = build_root_system(fam, r);
    for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
      // mask = retained simple roots S; the full set is excluded (R_X^+ = {}).
      std::vector<int> S;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) S.push_back(i);
      ParabolicSubset ps = parabolic_subset(rs, S);
      SnowCase c;
      c.family = fam;
      c.rank = r;
      c.S = S;
      c.n = static_cast<int>(ps.r_x_plus.size());
      c.degree = flag_degree(rs, ps, anticanonical_weight(ps));
      c.bound = rat_pow(Rat(c.n + 1), c.n);
      c.equality = c.degree == c.bound;
      c.violated = c.degree > c.bound;
      if (c.equality) ++rep.equalities;
      if (c.violated) ++rep.violations;
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

Rat integrate_monomial_simplex(const std::vector<RatVec>& simplex,
                               const std::vector<int>& exponents) {
  const int n = static_cast<int>(simplex.size()) - 1;
  if (static_cast<int>(exponents.size()) != n + 1)
    throw InvalidParameter("need one exponent per barycentric coordinate");
  Rat vol = simplex_volume_local(simplex);
  if (vol == 0) throw DegenerateSimplex("simplex has zero volume");
  int total = 0;
  Rat num = Rat(factorial(n)) * vol;
  for (int a : exponents) {
    if (a < 0) throw InvalidParameter("exponents must be nonnegative");
    num *= Rat(factorial(a));
    total += a;
  }
  return num / Rat(factorial(n + total));
}

Rat polytope_linear_form_integral(const Polytope& p,
                                  const std::vector<RatVec>& coeffs,
                                  const std::vector<Rat>& consts) {
  const int n = p.dim();
  Rat total = 0;
  for (const auto& simplex : triangulate(p)) {
    // Each form <c,x> + d restricted to the simplex is the barycentric form
    // sum_i lambda_i (<c, v_i> + d) since the lambda_i sum to 1.
    std::vector<RatVec> bary_forms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      RatVec f(n + 1);
      for (int i = 0; i <= n; ++i) f[i] = dot(coeffs[k], simplex[i]) + consts[k];
      bary_forms.push_back(std::move(f));
    }
    for (const auto& [expo, coef] : expand_forms(bary_forms, n + 1))
      total += coef * integrate_monomial_simplex(simplex, expo);
  }
  return total;
}

Rat polytope_monomial_integral(const Polytope& p, const std::vector<int>& powers) {
  const int n = p.dim();
  std::vector<RatVec> coeffs;
  std::vector<Rat> consts;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < powers[c]; ++k) {
      RatVec e(n, Rat(0));
      e[c] = 1;
      coeffs.push_back(std::move(e));
      consts.push_back(Rat(0));
    }
  return polytope_linear_form_integral(p, coeffs, consts);
}

Rat dh_density(const RootSystem& rs, const RatVec& p_ambient) {
  Rat v = 1;
  for (const RatVec& a : rs.positive_roots) {
    Rat pairing = dot(a, p_ambient);
    if (pairing > 0) v *= pairing / dot(a, rs.rho);
  }
  return v;
}

namespace {

/// DH density as linear forms in fundamental-weight coordinates; throws
/// ChamberViolation unless every vertex of P pairs positively with every
/// positive root.
std::vector<RatVec> chamber_forms(const RootSystem& rs, const Polytope& p) {
  const int n = p.dim();
  if (n != rs.rank)
    throw InvalidParameter("weight polytope dimension must equal the rank");
  std::vector<RatVec> forms;
  for (const RatVec& a : rs.positive_roots) {
    RatVec f(n);
    for (int i = 0; i < n; ++i) f[i] = dot(a, rs.fundamental_weights[i]);
    Rat denom = dot(a, rs.rho);
    for (Rat& x : f) x /= denom;
    for (const RatVec& v : p.v().vertices)
      if (dot(f, v) <= 0)
        throw ChamberViolation("polytope meets a Weyl chamber wall");
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace

Rat dh_integrate(const RootSystem& rs, const Polytope& p_weight_coords) {
  if (rs.positive_roots.empty())
    return volume_and_barycenter(p_weight_coords).first;
  std::vector<RatVec> forms = chamber_forms(rs, p_weight_coords);
  std::vector<Rat> consts(forms.size(), Rat(0));
  return polytope_linear_form_integral(p_weight_coords, forms, consts);
}

HoroReport horospherical_check(const RootSystem& rs, const Polytope& p_weight_coords) {
  const Polytope& p = p_weight_coords;
  const int dim_p = p.dim();
  HoroReport rep;
  std::vector<RatVec> forms;
  if (!rs.positive_roots.empty()) forms = chamber_forms(rs, p);
  std::vector<Rat> consts(forms.size(), Rat(0));
  rep.dh_mass = forms.empty() ? volume_and_barycenter(p).first
                              : polytope_linear_form_integral(p, forms, consts);
  rep.dh_barycenter.resize(dim_p);
  for (int c = 0; c < dim_p; ++c) {
    auto coeffs = forms;
    auto cst = consts;
    RatVec e(dim_p, Rat(0));
    e[c] = 1;
    coeffs.push_back(std::move(e));
    cst.push_back(Rat(0));
    rep.dh_barycenter[c] = polytope_linear_form_integral(p, coeffs, cst) / rep.dh_mass;
  }
  if (rs.positive_roots.empty()) {
    rep.root_sum.assign(dim_p, Rat(0));
  } else {
    RatVec two_rho(rs.ambient, Rat(0));
    for (const RatVec& a : rs.positive_roots) two_rho = add(two_rho, a);
    rep.root_sum = ambient_to_weight(rs, two_rho);
  }
  rep.ke_candidate = rep.dh_barycenter == rep.root_sum;
  rep.n = dim_p + static_cast<int>(rs.positive_roots.size());
  rep.bound = rat_pow(Rat(rep.n + 1), rep.n) / Rat(factorial(rep.n));
  rep.bound_status = rep.dh_mass == rep.bound
                         ? BoundStatus::Equality
                         : (rep.dh_mass < rep.bound ? BoundStatus::Holds
                                                    : BoundStatus::Violated);
  rep.is_delzant = is_delzant(p);
  rep.notes.push_back(
      "bound uses n = dim P + |R+|; the source statement leaves n ambiguous");
  if (!rep.ke_candidate && rep.bound_status == BoundStatus::Violated)
    rep.notes.push_back("bound exceeded with no KE claim (barycenter criterion fails)");
  return rep;
}

}  // namespace keconvex
