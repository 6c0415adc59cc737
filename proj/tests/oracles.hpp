// Brute-force reference computations for the unit tests. Deliberately
// independent of the library (and of Eigen): plain loops over
// vector<vector<double>> so the production path and the checks cannot
// share a bug.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<double>>;

inline Mat zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, std::vector<double>(cols, 0.0));
}

inline Mat matmul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

inline Mat transpose(const Mat& a) {
  Mat out = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

inline Mat gram(const Mat& a) { return matmul(transpose(a), a); }

inline double frobenius(const Mat& a) {
  double sum = 0.0;
  for (const auto& row : a) {
    for (double v : row) sum += v * v;
  }
  return std::sqrt(sum);
}

// Gauss-Jordan inverse with partial pivoting; throws on singular input.
inline Mat invert(Mat a) {
  const std::size_t n = a.size();
  Mat inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-14) throw std::runtime_error("oracle: singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Cyclic Jacobi eigenvalue iteration for symmetric matrices.
inline std::vector<double> sym_eigenvalues(Mat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

inline double max_eigenvalue(const Mat& sym) {
  double best = -1e300;
  for (double v : sym_eigenvalues(sym)) best = std::max(best, v);
  return best;
}

inline double min_eigenvalue(const Mat& sym) {
  double best = 1e300;
  for (double v : sym_eigenvalues(sym)) best = std::min(best, v);
  return best;
}

// deterministic test-data generator, unrelated to the library's Rng
inline Mat random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat out = zeros(rows, cols);
  for (auto& row : out) {
    for (double& v : row) v = normal(rng);
  }
  return out;
}

inline void normalize_columns(Mat* a) {
  for (std::size_t j = 0; j < (*a)[0].size(); ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < a->size(); ++i) norm += (*a)[i][j] * (*a)[i][j];
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < a->size(); ++i) (*a)[i][j] /= norm;
  }
}

}  // namespace oracle
