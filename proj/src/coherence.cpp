#include "sompkit/coherence.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <string>

namespace sompkit::coherence {

namespace {

constexpr double kUnitNormTol = 1e-8;
constexpr Eigen::Index kGramPathMaxCols = 2048;

void require_unit_columns(const DenseMatrix& phi) {
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    if (std::abs(phi.col(j).norm() - 1.0) > kUnitNormTol) {
      throw normalization_error("column " + std::to_string(j) +
                                " does not have unit l2 norm (got " +
                                std::to_string(phi.col(j).norm()) + ")");
    }
  }
}

// Scans the strict upper triangle of a block of the Gram matrix, keeping
// the first (lexicographically smallest) maximizing pair.
void scan_block(const DenseMatrix& block, int row0, int col0, double* best,
                std::pair<int, int>* pair) {
  for (Eigen::Index r = 0; r < block.rows(); ++r) {
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      const int i = row0 + static_cast<int>(r);
      const int j = col0 + static_cast<int>(c);
      if (i >= j) continue;
      const double v = std::abs(block(r, c));
      if (v > *best) {
        *best = v;
        *pair = {i, j};
      }
    }
  }
}

}  // namespace

CoherenceReport mutual_coherence(const DenseMatrix& phi) {
  require_nonempty(phi, "mutual_coherence");
  require_finite(phi, "mutual_coherence");
  if (phi.cols() < 2) {
    throw dimension_error("mutual_coherence: need at least two columns");
  }
  require_unit_columns(phi);

  double best = -1.0;
  std::pair<int, int> pair{-1, -1};
  if (phi.cols() <= kGramPathMaxCols) {
    DenseMatrix gram;
    gram.noalias() = phi.transpose() * phi;
    scan_block(gram, 0, 0, &best, &pair);
  } else {
    // blocked column-pair passes keep memory bounded for large N
    const Eigen::Index block = 512;
    for (Eigen::Index i0 = 0; i0 < phi.cols(); i0 += block) {
      const Eigen::Index ni = std::min(block, phi.cols() - i0);
      for (Eigen::Index j0 = i0; j0 < phi.cols(); j0 += block) {
        const Eigen::Index nj = std::min(block, phi.cols() - j0);
        DenseMatrix g;
        g.noalias() = phi.middleCols(i0, ni).transpose() * phi.middleCols(j0, nj);
        scan_block(g, static_cast<int>(i0), static_cast<int>(j0), &best, &pair);
      }
    }
  }

  CoherenceReport report;
  report.mu = std::max(best, 0.0);
  report.argmax_pair = pair;
  report.gram_offdiag_max_abs = report.mu;
  const int m = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  report.welch_lower_bound = (n >= m && n >= 2) ? welch_bound(m, n) : 0.0;
  return report;
}

double welch_bound(int m, int n) {
  if (m < 1 || n < 2) {
    throw domain_error("welch_bound: need M >= 1 and N >= 2");
  }
  if (n < m) {
    throw domain_error("welch_bound: N < M");
  }
  return std::sqrt(static_cast<double>(n - m) /
                   (static_cast<double>(m) * static_cast<double>(n - 1)));
}

double erc_constant(const DenseMatrix& phi, const std::vector<int>& support) {
  require_nonempty(phi, "erc_constant");
  require_finite(phi, "erc_constant");
  if (support.empty()) {
    throw domain_error("erc_constant: empty support");
  }
  std::vector<bool> in_support(static_cast<std::size_t>(phi.cols()), false);
  for (int idx : support) {
    if (idx < 0 || idx >= phi.cols()) {
      throw dimension_error("erc_constant: support index " + std::to_string(idx) +
                            " out of range");
    }
    if (in_support[static_cast<std::size_t>(idx)]) {
      throw domain_error("erc_constant: duplicate support index " + std::to_string(idx));
    }
    in_support[static_cast<std::size_t>(idx)] = true;
  }

  const DenseMatrix sub = gather_columns(phi, support);
  Eigen::ColPivHouseholderQR<DenseMatrix> qr(sub);
  const Eigen::Index limit = std::min(sub.rows(), sub.cols());
  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index k = 0; k < sub.cols(); ++k) {
    const double colnorm = sub.col(perm[k]).norm();
    const double pivot = k < limit ? std::abs(qr.matrixQR()(k, k)) : 0.0;
    if (pivot < 1e-12 * colnorm || colnorm == 0.0) {
      throw singularity_error("erc_constant: support column " +
                              std::to_string(support[static_cast<std::size_t>(perm[k])]) +
                              " makes the block rank deficient");
    }
  }

  double g = 0.0;
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    if (in_support[static_cast<std::size_t>(j)]) continue;
    g = std::max(g, qr.solve(phi.col(j)).lpNorm<1>());
  }
  return g;
}

double erc_upper_bound(double mu, int sparsity) {
  if (sparsity < 1) {
    throw domain_error("erc_upper_bound: sparsity must be positive");
  }
  const double denom = 1.0 - (sparsity - 1) * mu;
  if (denom <= 0.0) {
    throw domain_error("erc_upper_bound: (L-1) mu >= 1, bound vacuous");
  }
  return sparsity * mu / denom;
}

double gram_min_eig_lower_bound(double mu, int sparsity) {
  return 1.0 - (sparsity - 1) * mu;
}

DenseMatrix renormalize_columns(const DenseMatrix& phi) {
  require_nonempty(phi, "renormalize_columns");
  require_finite(phi, "renormalize_columns");
  DenseMatrix out = phi;
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    const double norm = out.col(j).norm();
    if (norm == 0.0) {
      throw normalization_error("renormalize_columns: column " + std::to_string(j) +
                                " is zero");
    }
    out.col(j) /= norm;
  }
  return out;
}

}  // namespace sompkit::coherence
