#pragma once

#include <stdexcept>
#include <string>

namespace keconvex {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KECONVEX_ERROR(Name)                                  \
  struct Name : Error {                                       \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

KECONVEX_ERROR(EmptyOrUnbounded);
KECONVEX_ERROR(DimensionTooLarge);
KECONVEX_ERROR(DegenerateInput);
KECONVEX_ERROR(BudgetExceeded);
KECONVEX_ERROR(OriginNotInterior);
KECONVEX_ERROR(DegenerateVertexCone);
KECONVEX_ERROR(EmptyIntersection);
KECONVEX_ERROR(InvalidParameter);
KECONVEX_ERROR(NonBarycenterDivergence);
KECONVEX_ERROR(NoConvergence);
KECONVEX_ERROR(NoSolution);
KECONVEX_ERROR(NonConvexProfile);
KECONVEX_ERROR(QuadratureFailure);
KECONVEX_ERROR(NotAmple);
KECONVEX_ERROR(UnsupportedType);
KECONVEX_ERROR(ChamberViolation);
KECONVEX_ERROR(DegenerateSimplex);
KECONVEX_ERROR(ParseError);

#undef KECONVEX_ERROR

}  // namespace keconvex
