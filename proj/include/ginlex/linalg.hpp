#pragma once

#include <vector>

#include "ginlex/numbers.hpp"

namespace ginlex {

using RatMatrix = std::vector<std::vector<Rat>>;  // row-major

// Rank by fraction-free elimination: rows are cleared to integers, then a
// Bareiss-style sweep with partial pivoting on numerator magnitude and row
// gcd reduction after each step (row scaling does not change rank).
int rank(const RatMatrix& m);

// Exact determinant of a square matrix (fraction-free on the cleared
// integer matrix, denominators tracked separately).
Rat determinant(const RatMatrix& m);

// In-place reduced row echelon form; returns pivot column indices in order.
std::vector<int> rref(RatMatrix& m);

// Basis of the right kernel {x : m x = 0}.
RatMatrix kernel_basis(const RatMatrix& m, int ncols);

// Is v in the span of the rows of m?
bool in_row_span(const RatMatrix& m, const std::vector<Rat>& v);

// Inverse of a square invertible matrix.
RatMatrix inverse(const RatMatrix& m);

}  // namespace ginlex
