#include "sompkit/somp.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "sompkit/numerics.hpp"

namespace sompkit::somp {

namespace {

void require_unit_columns(const DenseMatrix& phi, const char* what) {
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    if (std::abs(phi.col(j).norm() - 1.0) > 1e-8) {
      throw normalization_error(std::string(what) + ": column " + std::to_string(j) +
                                " does not have unit l2 norm");
    }
  }
}

// shared greedy loop; `limit` is the iteration cap, `tau` the residual
// guard (negative disables it, giving the sparsity-stopped behaviour)
RecoveryTrace greedy_pursuit(const DenseMatrix& phi, const DenseMatrix& y, int limit,
                             double tau, Termination exhausted) {
  RecoveryTrace trace;
  DenseMatrix residual = y;
  trace.residual_spectral_norms.push_back(numerics::spectral_norm(residual));
  trace.termination = exhausted;

  std::vector<bool> used(static_cast<std::size_t>(phi.cols()), false);
  for (int it = 0; it < limit; ++it) {
    if (tau >= 0.0 && trace.residual_spectral_norms.back() < tau) {
      trace.termination = Termination::threshold_reached;
      return trace;
    }
    const SelectionScores sel = selection_scores(phi, residual);
    if (used[static_cast<std::size_t>(sel.argmax)]) {
      // only reachable through degenerate numerics; orthogonality keeps
      // scores of selected atoms at zero
      trace.termination = Termination::singularity;
      return trace;
    }
    trace.selected.push_back(sel.argmax);
    used[static_cast<std::size_t>(sel.argmax)] = true;
    try {
      residual = numerics::least_squares_residual(gather_columns(phi, trace.selected), y);
    } catch (const singularity_error&) {
      trace.selected.pop_back();
      trace.termination = Termination::singularity;
      return trace;
    }
    trace.residual_spectral_norms.push_back(numerics::spectral_norm(residual));
  }
  if (tau >= 0.0 && trace.residual_spectral_norms.back() < tau) {
    trace.termination = Termination::threshold_reached;
  }
  return trace;
}

}  // namespace

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::sparsity_reached: return "sparsity_reached";
    case Termination::threshold_reached: return "threshold_reached";
    case Termination::max_iterations: return "max_iterations";
    case Termination::singularity: return "singularity";
  }
  return "unknown";
}

std::vector<int> RecoveryTrace::support_set() const {
  std::vector<int> sorted = selected;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

SelectionScores selection_scores(const DenseMatrix& phi, const DenseMatrix& residual) {
  require_nonempty(phi, "selection_scores");
  require_finite(residual, "selection_scores");
  if (phi.rows() != residual.rows()) {
    throw dimension_error("selection_scores: dictionary and residual row counts differ");
  }
  DenseMatrix correlations;
  correlations.noalias() = phi.transpose() * residual;
  SelectionScores out;
  out.scores.resize(static_cast<std::size_t>(phi.cols()));
  double best = -1.0;
  for (Eigen::Index i = 0; i < phi.cols(); ++i) {
    const double score = correlations.row(i).norm();
    out.scores[static_cast<std::size_t>(i)] = score;
    if (score > best) {
      best = score;
      out.argmax = static_cast<int>(i);
    }
  }
  return out;
}

RecoveryTrace somps(const DenseMatrix& phi, const DenseMatrix& y, int sparsity) {
  require_nonempty(phi, "somps");
  require_nonempty(y, "somps");
  require_finite(y, "somps");
  if (phi.rows() != y.rows()) {
    throw dimension_error("somps: dictionary and observation row counts differ");
  }
  if (sparsity < 1 || sparsity > phi.rows()) {
    throw domain_error("somps: need 1 <= L <= M");
  }
  require_unit_columns(phi, "somps");
  return greedy_pursuit(phi, y, sparsity, -1.0, Termination::sparsity_reached);
}

RecoveryTrace sompt(const DenseMatrix& phi, const DenseMatrix& y, double tau,
                    int max_iter) {
  require_nonempty(phi, "sompt");
  require_nonempty(y, "sompt");
  require_finite(y, "sompt");
  if (phi.rows() != y.rows()) {
    throw dimension_error("sompt: dictionary and observation row counts differ");
  }
  if (!(tau > 0.0)) throw domain_error("sompt: tau must be positive");
  if (max_iter < 1 || max_iter > phi.rows()) {
    throw domain_error("sompt: need 1 <= max_iter <= M");
  }
  require_unit_columns(phi, "sompt");
  return greedy_pursuit(phi, y, max_iter, tau, Termination::max_iterations);
}

RecoveryTrace sompt(const DenseMatrix& phi, const DenseMatrix& y, double tau) {
  return sompt(phi, y, tau, static_cast<int>(phi.rows()));
}

bool recovery_success(const RecoveryTrace& trace, const dictionary::RowSparseSignal& truth) {
  return trace.support_set() == truth.support;
}

namespace diagnostics {

IterationDiagnostics iteration_diagnostics(const DenseMatrix& phi,
                                           const dictionary::RowSparseSignal& signal,
                                           const DenseMatrix& noise,
                                           const std::vector<int>& partial_selection) {
  std::vector<bool> in_support(static_cast<std::size_t>(phi.cols()), false);
  for (int idx : signal.support) in_support[static_cast<std::size_t>(idx)] = true;
  for (int idx : partial_selection) {
    if (idx < 0 || idx >= phi.cols() || !in_support[static_cast<std::size_t>(idx)]) {
      throw precondition_error(
          "iteration_diagnostics: partial selection is not a subset of the support");
    }
  }
  if (noise.rows() != phi.rows()) {
    throw dimension_error("iteration_diagnostics: noise row count mismatch");
  }

  // B = P_perp Phi C and A = P_perp N, with P_perp formed explicitly
  // from the selected columns
  DenseMatrix projected_signal = dictionary::synthesize(phi, signal);
  DenseMatrix projected_noise = noise;
  if (!partial_selection.empty()) {
    const DenseMatrix sub = gather_columns(phi, partial_selection);
    projected_signal = numerics::least_squares_residual(sub, projected_signal);
    projected_noise = numerics::least_squares_residual(sub, projected_noise);
  }

  IterationDiagnostics diag;
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    const double signal_score = (phi.col(j).transpose() * projected_signal).norm();
    const double noise_score = (phi.col(j).transpose() * projected_noise).norm();
    diag.z = std::max(diag.z, noise_score);
    if (in_support[static_cast<std::size_t>(j)]) {
      diag.q1 = std::max(diag.q1, signal_score);
    } else {
      diag.q2 = std::max(diag.q2, signal_score);
    }
  }
  diag.g = coherence::erc_constant(phi, signal.support);
  return diag;
}

}  // namespace diagnostics

}  // namespace sompkit::somp
