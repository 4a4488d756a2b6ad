#pragma once

#include "labcount/numeric.hpp"

#include <vector>

namespace labcount {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

/// Rank by exact Gaussian elimination.
int matrix_rank(RatMatrix m);

/// Basis of { x : m x = 0 } for row vectors of width `cols`; deterministic
/// (free variables in ascending order, pivot entries back-substituted).
std::vector<RatRow> nullspace(const RatMatrix& m, int cols);

Rat dot(const RatRow& a, const RatRow& b);

/// Solves the square system a x = rhs; throws usage_error if singular.
RatRow solve_square(RatMatrix a, RatRow rhs);

}  // namespace labcount
