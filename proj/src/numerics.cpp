#include "sompkit/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace sompkit::numerics {

double spectral_norm(const DenseMatrix& a) {
  require_nonempty(a, "spectral_norm");
  require_finite(a, "spectral_norm");
  DenseMatrix gram;
  if (a.cols() <= a.rows()) {
    gram.noalias() = a.transpose() * a;
  } else {
    gram.noalias() = a * a.transpose();
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(gram, Eigen::EigenvaluesOnly);
  const double lam = eig.eigenvalues().maxCoeff();
  return std::sqrt(std::max(lam, 0.0));
}

double frobenius_norm(const DenseMatrix& a) {
  require_nonempty(a, "frobenius_norm");
  require_finite(a, "frobenius_norm");
  return a.norm();
}

DenseMatrix least_squares_residual(const DenseMatrix& a, const DenseMatrix& y) {
  require_nonempty(a, "least_squares_residual: A");
  require_nonempty(y, "least_squares_residual: Y");
  require_finite(a, "least_squares_residual: A");
  require_finite(y, "least_squares_residual: Y");
  if (a.rows() != y.rows()) {
    throw dimension_error("least_squares_residual: A and Y row counts differ");
  }

  Eigen::ColPivHouseholderQR<DenseMatrix> qr(a);
  const auto& perm = qr.colsPermutation().indices();
  const Eigen::Index limit = std::min(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const Eigen::Index col = perm[k];
    const double colnorm = a.col(col).norm();
    const double pivot = k < limit ? std::abs(qr.matrixQR()(k, k)) : 0.0;
    if (pivot < 1e-12 * colnorm || colnorm == 0.0) {
      throw singularity_error("least_squares_residual: column " + std::to_string(col) +
                              " is linearly dependent on the others");
    }
  }

  DenseMatrix residual = y - a * qr.solve(y);
  // one re-orthogonalization pass tightens A^T R toward machine precision
  residual -= a * qr.solve(residual);
  return residual;
}

double min_eig_gram(const DenseMatrix& a) {
  require_nonempty(a, "min_eig_gram");
  require_finite(a, "min_eig_gram");
  DenseMatrix gram;
  gram.noalias() = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(gram, Eigen::EigenvaluesOnly);
  return std::max(eig.eigenvalues().minCoeff(), -1e-12);
}

}  // namespace sompkit::numerics
