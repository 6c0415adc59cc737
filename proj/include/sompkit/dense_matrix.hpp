#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sompkit/errors.hpp"

namespace sompkit {

/// Dense matrix of 64-bit reals. All public operations reject NaN/Inf
/// entries at their boundaries and never produce them.
using DenseMatrix = Eigen::MatrixXd;

inline void require_nonempty(const DenseMatrix& a, const char* what) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw dimension_error(std::string(what) + ": matrix is empty");
  }
}

inline void require_finite(const DenseMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw domain_error(std::string(what) + ": non-finite entry");
  }
}

/// Columns of `a` indexed by `idx`, in the order given.
inline DenseMatrix gather_columns(const DenseMatrix& a, const std::vector<int>& idx) {
  DenseMatrix out(a.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const int j = idx[k];
    if (j < 0 || j >= a.cols()) {
      throw dimension_error("column index " + std::to_string(j) + " out of range");
    }
    out.col(static_cast<Eigen::Index>(k)) = a.col(j);
  }
  return out;
}

}  // namespace sompkit
