#pragma once

#include <vector>

#include "arcalg/rational.hpp"

namespace arcalg {

// Dense matrices over Q, row-major. Only what the resolution engine needs:
// echelon form, nullspace, and solving inside a column space.
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // rows

RMat rmat(std::size_t rows, std::size_t cols);

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(RMat& m);

std::size_t rank(RMat m);

// Basis of { x : m x = 0 }, one vector per non-pivot column.
std::vector<RVec> nullspace(const RMat& m);

// Solves m x = b exactly. Returns false if inconsistent.
bool solve(const RMat& m, const RVec& b, RVec& x);

}  // namespace arcalg
