#pragma once

#include "keconvex/rational.hpp"

#include <optional>
#include <vector>

namespace keconvex {

/// Dense rational matrix, row-major. Small n only (polytope dimensions).
using RatMat = std::vector<RatVec>;

inline RatMat rat_mat(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rat(0)));
}

/// Exact determinant by fraction-free-ish Gaussian elimination.
Rat det(RatMat m);

/// Solves m x = rhs exactly; nullopt when m is singular.
std::optional<RatVec> solve_linear(RatMat m, RatVec rhs);

/// Row rank of an exact matrix.
int rank(RatMat m);

/// Inverse; nullopt when singular.
std::optional<RatMat> invert(const RatMat& m);

RatVec mat_vec(const RatMat& m, const RatVec& v);

}  // namespace keconvex
