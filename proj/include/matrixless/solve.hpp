#pragma once

#include "matrixless/dense_matrix.hpp"
#include "matrixless/precision.hpp"

namespace matrixless {

/// Solves A X = B by Gaussian elimination with row pivoting at `ctx`
/// precision. Throws SingularMatrixError when a pivot falls below
/// eps * ||A||_inf.
DenseMatrix solve_dense(const DenseMatrix& a, const DenseMatrix& b, const PrecisionContext& ctx);

}  // namespace matrixless
