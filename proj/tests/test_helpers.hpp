#pragma once

#include <vector>

#include "oracles.hpp"
#include "sompkit/dense_matrix.hpp"

namespace testutil {

inline sompkit::DenseMatrix to_eigen(const oracle::Mat& a) {
  sompkit::DenseMatrix out(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
    }
  }
  return out;
}

inline oracle::Mat to_oracle(const sompkit::DenseMatrix& a) {
  oracle::Mat out = oracle::zeros(static_cast<std::size_t>(a.rows()),
                                  static_cast<std::size_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    }
  }
  return out;
}

/// random unit-column matrix built entirely on the oracle side
inline sompkit::DenseMatrix random_unit_columns(int m, int n, std::uint32_t seed) {
  oracle::Mat a = oracle::random_matrix(static_cast<std::size_t>(m),
                                        static_cast<std::size_t>(n), seed);
  oracle::normalize_columns(&a);
  return to_eigen(a);
}

inline std::vector<int> random_support(int n, int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  std::vector<int> support(pool.begin(), pool.begin() + count);
  std::sort(support.begin(), support.end());
  return support;
}

}  // namespace testutil
