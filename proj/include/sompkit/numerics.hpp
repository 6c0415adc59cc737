#pragma once

#include "sompkit/dense_matrix.hpp"

namespace sompkit::numerics {

/// Largest singular value of `a`, computed from the eigen-decomposition
/// of the smaller of the two Gram matrices.
double spectral_norm(const DenseMatrix& a);

/// sqrt of the sum of squared entries.
double frobenius_norm(const DenseMatrix& a);

/// Residual Y - A A'Y of the least-squares fit of Y on the columns of A,
/// solved through a column-pivoted orthogonal factorization (never the
/// normal equations). Throws singularity_error, naming the offending
/// column, when a pivot falls below 1e-12 times its column norm.
DenseMatrix least_squares_residual(const DenseMatrix& a, const DenseMatrix& y);

/// Smallest eigenvalue of A^T A. Reports of numerical negativity are
/// clamped at the -1e-12 floor.
double min_eig_gram(const DenseMatrix& a);

}  // namespace sompkit::numerics
