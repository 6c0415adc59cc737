#pragma once

#include <utility>
#include <vector>

#include "sompkit/dense_matrix.hpp"

namespace sompkit::coherence {

/// Mutual-incoherence summary of a unit-norm-column matrix.
struct CoherenceReport {
  double mu = 0.0;                   ///< max_{i != j} |<phi_i, phi_j>|
  double welch_lower_bound = 0.0;    ///< sqrt((N-M)/(M(N-1))), 0 when undefined
  std::pair<int, int> argmax_pair{-1, -1};  ///< attaining pair, i < j, smallest first
  double gram_offdiag_max_abs = 0.0;
};

/// Columns must have unit l2 norm within 1e-8 (normalization_error names
/// the first violating column). Ties in the maximizing pair break toward
/// the lexicographically smallest (i, j).
CoherenceReport mutual_coherence(const DenseMatrix& phi);

/// sqrt((N-M)/(M(N-1))); the floor on achievable coherence for an M x N
/// unit-norm frame. Requires N >= M >= 1 and N >= 2.
double welch_bound(int m, int n);

/// Exact-recovery constant G: the largest l1 norm, over columns `a`
/// outside the support, of the least-squares representation of `a` in
/// the support columns. One factorization of the support block is reused
/// across all complement columns.
double erc_constant(const DenseMatrix& phi, const std::vector<int>& support);

/// L mu / (1 - (L-1) mu); requires (L-1) mu < 1.
double erc_upper_bound(double mu, int sparsity);

/// Gershgorin bound 1 - (L-1) mu on the smallest eigenvalue of the
/// support Gram matrix. May be negative; callers interpret.
double gram_min_eig_lower_bound(double mu, int sparsity);

/// Columns scaled to unit l2 norm. Zero columns raise normalization_error.
DenseMatrix renormalize_columns(const DenseMatrix& phi);

}  // namespace sompkit::coherence
