#pragma once

#include <vector>

#include "sompkit/dense_matrix.hpp"
#include "sompkit/dictionary.hpp"

namespace sompkit::somp {

enum class Termination {
  sparsity_reached,
  threshold_reached,
  max_iterations,
  singularity,
};

const char* termination_name(Termination t);

/// What a recovery run did: the atoms in selection order, the residual
/// spectral norm per iteration (entry 0 is ||Y||_2), and why it stopped.
struct RecoveryTrace {
  std::vector<int> selected;
  std::vector<double> residual_spectral_norms;
  Termination termination = Termination::sparsity_reached;

  std::vector<int> support_set() const;  ///< sorted copy of `selected`
};

struct SelectionScores {
  std::vector<double> scores;  ///< score[i] = l2 norm of row i of Phi^T R
  int argmax = 0;              ///< ties break toward the smallest index
};

SelectionScores selection_scores(const DenseMatrix& phi, const DenseMatrix& residual);

/// Sparsity-stopped variant: runs exactly `sparsity` iterations of
/// select / augment / project. A rank-deficient selection terminates
/// with a partial trace (never a crash).
RecoveryTrace somps(const DenseMatrix& phi, const DenseMatrix& y, int sparsity);

/// Threshold-stopped variant: iterates while the residual spectral norm
/// is at least tau, up to max_iter selections.
RecoveryTrace sompt(const DenseMatrix& phi, const DenseMatrix& y, double tau,
                    int max_iter);
RecoveryTrace sompt(const DenseMatrix& phi, const DenseMatrix& y, double tau);

/// Success is exact support-set equality, indifferent to selection order.
bool recovery_success(const RecoveryTrace& trace, const dictionary::RowSparseSignal& truth);

namespace diagnostics {

/// Per-iteration quantities for a correct partial selection: the largest
/// projected-signal correlation over support atoms (q1), over complement
/// atoms (q2), the largest projected-noise correlation over all atoms
/// (z), and the exact-recovery constant of the true support (g).
/// Test-side instrumentation, not part of the recovery API.
struct IterationDiagnostics {
  double q1 = 0.0;
  double q2 = 0.0;
  double z = 0.0;
  double g = 0.0;
};

IterationDiagnostics iteration_diagnostics(const DenseMatrix& phi,
                                           const dictionary::RowSparseSignal& signal,
                                           const DenseMatrix& noise,
                                           const std::vector<int>& partial_selection);

}  // namespace diagnostics

}  // namespace sompkit::somp
