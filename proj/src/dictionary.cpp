#include "sompkit/dictionary.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sompkit/numerics.hpp"
#include "sompkit/rng.hpp"

namespace sompkit::dictionary {

namespace {

// row-major fill keeps the draw order independent of Eigen's storage
DenseMatrix standard_gaussian(int rows, int cols, Rng& rng) {
  DenseMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out(i, j) = rng.gaussian();
    }
  }
  return out;
}

std::vector<int> sample_support(int n, int sparsity, Rng& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < sparsity; ++i) {
    const int j = i + rng.uniform_int(n - i);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> support(pool.begin(), pool.begin() + sparsity);
  std::sort(support.begin(), support.end());
  return support;
}

void record_row_norms(RowSparseSignal* signal) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (Eigen::Index i = 0; i < signal->coeffs.rows(); ++i) {
    const double norm = signal->coeffs.row(i).norm();
    lo = std::min(lo, norm);
    hi = std::max(hi, norm);
  }
  signal->c_min = lo;
  signal->c_max = hi;
}

double max_offdiag_abs(const DenseMatrix& gram) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j) {
      best = std::max(best, std::abs(gram(i, j)));
    }
  }
  return best;
}

}  // namespace

NoiseSpec NoiseSpec::gaussian(double sigma, int m, int d) {
  if (!(sigma > 0.0)) throw domain_error("NoiseSpec: sigma must be positive");
  if (m < 1 || d < 1) throw dimension_error("NoiseSpec: dims must be positive");
  return NoiseSpec{Kind::gaussian, sigma, m, d};
}

NoiseSpec NoiseSpec::spectral_bounded(double epsilon, int m, int d) {
  if (!(epsilon > 0.0)) throw domain_error("NoiseSpec: epsilon must be positive");
  if (m < 1 || d < 1) throw dimension_error("NoiseSpec: dims must be positive");
  return NoiseSpec{Kind::spectral_bounded, epsilon, m, d};
}

MeasurementMatrix gaussian_matrix(int m, int n, std::uint64_t seed) {
  if (m < 1) throw dimension_error("gaussian_matrix: M must be positive");
  if (m > n) throw dimension_error("gaussian_matrix: M > N");
  Rng rng(seed);
  MeasurementMatrix out;
  out.matrix = coherence::renormalize_columns(standard_gaussian(m, n, rng));
  out.coherence = n >= 2 ? coherence::mutual_coherence(out.matrix)
                         : coherence::CoherenceReport{};
  out.provenance = "gaussian(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                   ",seed=" + std::to_string(seed) + ")";
  return out;
}

MeasurementMatrix design_low_coherence(int m, int n, const DesignParams& params,
                                       std::uint64_t seed) {
  if (m < 1) throw dimension_error("design_low_coherence: M must be positive");
  if (m > n) throw dimension_error("design_low_coherence: M > N");

  MeasurementMatrix out;
  out.provenance = "designed(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                   ",seed=" + std::to_string(seed) + ",iters=" + std::to_string(params.iters) +
                   ",shrink=" + std::to_string(params.shrink) + ")";

  if (m == n) {
    Rng rng(seed);
    Eigen::HouseholderQR<DenseMatrix> qr(standard_gaussian(m, n, rng));
    DenseMatrix q = qr.householderQ();
    const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (r(j, j) < 0) q.col(j) = -q.col(j);
    }
    out.matrix = q;
    out.coherence = n >= 2 ? coherence::mutual_coherence(out.matrix)
                           : coherence::CoherenceReport{};
    return out;
  }

  DenseMatrix phi = gaussian_matrix(m, n, seed).matrix;
  DenseMatrix best = phi;
  double best_mu = max_offdiag_abs(phi.transpose() * phi);
  double mark_mu = best_mu;
  int mark_iter = 0;

  std::vector<double> offdiag;
  offdiag.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);

  for (int it = 1; it <= params.iters; ++it) {
    DenseMatrix gram;
    gram.noalias() = phi.transpose() * phi;

    const double mu = max_offdiag_abs(gram);
    if (mu < best_mu) {
      best_mu = mu;
      best = phi;
    }
    if (mark_mu - best_mu >= params.improve_tol) {
      mark_mu = best_mu;
      mark_iter = it;
    } else if (it - mark_iter >= params.patience) {
      break;
    }

    offdiag.clear();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        offdiag.push_back(std::abs(gram(i, j)));
      }
    }
    const std::size_t pos = static_cast<std::size_t>(
        params.shrink_quantile * static_cast<double>(offdiag.size() - 1));
    std::nth_element(offdiag.begin(), offdiag.begin() + static_cast<std::ptrdiff_t>(pos),
                     offdiag.end());
    const double threshold = offdiag[pos];

    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(gram(i, j)) > threshold) {
          gram(i, j) *= params.shrink;
          gram(j, i) = gram(i, j);
        }
      }
    }

    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(gram);
    const auto& lam = eig.eigenvalues();  // ascending
    if (!(lam(n - m) > 1e-12 * lam(n - 1))) {
      throw singularity_error("design_low_coherence: rank collapse during projection");
    }
    for (int k = 0; k < m; ++k) {
      const Eigen::Index src = n - m + k;
      phi.row(k) = std::sqrt(std::max(lam(src), 0.0)) * eig.eigenvectors().col(src).transpose();
    }
    phi = coherence::renormalize_columns(phi);
  }

  {
    const double final_mu = max_offdiag_abs(phi.transpose() * phi);
    if (final_mu < best_mu) {
      best_mu = final_mu;
      best = phi;
    }
  }

  // stage two: descend the softmax surrogate of the squared off-diagonal
  // inner products, sharpening the softmax in stages
  if (params.polish_steps > 0) {
    phi = best;
    DenseMatrix momentum = DenseMatrix::Zero(m, n);
    DenseMatrix velocity = DenseMatrix::Zero(m, n);
    DenseMatrix gram(n, n), weights(n, n), grad(m, n);
    const double beta1 = 0.9, beta2 = 0.999;
    long step = 0;
    for (const double sharpness : {2000.0, 5000.0, 12000.0, 30000.0}) {
      for (int it = 0; it < params.polish_steps; ++it) {
        ++step;
        gram.noalias() = phi.transpose() * phi;
        gram.diagonal().setZero();
        const double mu = gram.cwiseAbs().maxCoeff();
        if (mu < best_mu) {
          best_mu = mu;
          best = phi;
        }
        weights = ((sharpness * gram.array().square()) - sharpness * mu * mu).exp();
        weights.diagonal().setZero();
        weights = (weights.array() / weights.sum() * gram.array()).matrix();
        grad.noalias() = 2.0 * phi * weights;
        momentum = beta1 * momentum + (1.0 - beta1) * grad;
        velocity =
            (beta2 * velocity.array() + (1.0 - beta2) * grad.array().square()).matrix();
        const double corr1 = 1.0 - std::pow(beta1, static_cast<double>(step));
        const double corr2 = 1.0 - std::pow(beta2, static_cast<double>(step));
        phi -= (params.polish_rate * (momentum.array() / corr1) /
                ((velocity.array() / corr2).sqrt() + 1e-12))
                   .matrix();
        for (Eigen::Index j = 0; j < n; ++j) phi.col(j).normalize();
      }
    }
    const double final_mu = max_offdiag_abs(phi.transpose() * phi);
    if (final_mu < best_mu) {
      best_mu = final_mu;
      best = phi;
    }
  }

  out.matrix = coherence::renormalize_columns(best);
  out.coherence = coherence::mutual_coherence(out.matrix);
  return out;
}

RowSparseSignal gen_signal(int n, int sparsity, int d, double c_min, std::uint64_t seed) {
  if (sparsity < 1 || sparsity > n) throw domain_error("gen_signal: need 1 <= L <= N");
  if (d < 1) throw domain_error("gen_signal: d must be positive");
  if (!(c_min > 0.0)) throw domain_error("gen_signal: c_min must be positive");

  Rng rng(seed);
  RowSparseSignal signal;
  signal.n_cols_total = n;
  signal.support = sample_support(n, sparsity, rng);

  const double magnitude = std::sqrt(c_min * c_min / d);
  signal.coeffs.resize(sparsity, d);
  for (int i = 0; i < sparsity; ++i) {
    for (int j = 0; j < d; ++j) {
      const double sign = (rng.next_u64() >> 63) ? 1.0 : -1.0;
      signal.coeffs(i, j) = sign * magnitude;
    }
  }
  record_row_norms(&signal);
  return signal;
}

RowSparseSignal gen_signal_dynamic_range(int n, int sparsity, int d, double c_min,
                                         double c_max, std::uint64_t seed) {
  if (sparsity < 1 || sparsity > n) throw domain_error("gen_signal_dynamic_range: need 1 <= L <= N");
  if (d < 1) throw domain_error("gen_signal_dynamic_range: d must be positive");
  if (!(c_min > 0.0) || c_min > c_max) {
    throw domain_error("gen_signal_dynamic_range: need 0 < c_min <= c_max");
  }

  Rng rng(seed);
  RowSparseSignal signal;
  signal.n_cols_total = n;
  signal.support = sample_support(n, sparsity, rng);
  signal.coeffs.resize(sparsity, d);
  for (int i = 0; i < sparsity; ++i) {
    const double target = c_min + (c_max - c_min) * rng.uniform();
    Eigen::RowVectorXd row(d);
    for (int j = 0; j < d; ++j) {
      row(j) = rng.gaussian();
    }
    const double norm = row.norm();
    if (norm == 0.0) {
      row.setZero();
      row(0) = 1.0;  // measure-zero guard
    }
    signal.coeffs.row(i) = row * (target / std::max(norm, 1e-300));
  }
  record_row_norms(&signal);
  return signal;
}

DenseMatrix sample_noise(const NoiseSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  DenseMatrix noise = standard_gaussian(spec.rows, spec.cols, rng);
  switch (spec.kind) {
    case NoiseSpec::Kind::gaussian:
      return spec.level * noise;
    case NoiseSpec::Kind::spectral_bounded: {
      const double norm = numerics::spectral_norm(noise);
      return (spec.level / norm) * noise;
    }
  }
  throw domain_error("sample_noise: unknown kind");
}

DenseMatrix synthesize(const DenseMatrix& phi, const RowSparseSignal& signal) {
  if (phi.cols() != signal.n_cols_total) {
    throw dimension_error("synthesize: dictionary width does not match the signal");
  }
  return gather_columns(phi, signal.support) * signal.coeffs;
}

void save_matrix(const std::string& path, const DenseMatrix& matrix) {
  require_nonempty(matrix, "save_matrix");
  require_finite(matrix, "save_matrix");
  std::ofstream out(path);
  if (!out) throw io_error("save_matrix: cannot open " + path);
  out << matrix.rows() << " " << matrix.cols() << "\n";
  char buf[40];
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", matrix(i, j));
      out << buf << (j + 1 == matrix.cols() ? "\n" : " ");
    }
  }
  if (!out) throw io_error("save_matrix: write failed for " + path);
}

DenseMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("load_matrix: cannot open " + path);
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) {
    throw io_error("load_matrix: malformed header in " + path);
  }
  DenseMatrix matrix(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!(in >> matrix(i, j))) {
        throw io_error("load_matrix: truncated data in " + path);
      }
    }
  }
  require_finite(matrix, "load_matrix");
  return matrix;
}

MeasurementMatrix measurement_matrix_from_file(const std::string& path) {
  MeasurementMatrix out;
  out.matrix = load_matrix(path);
  if (out.matrix.rows() > out.matrix.cols()) {
    throw dimension_error("measurement matrix must satisfy M <= N");
  }
  out.coherence = coherence::mutual_coherence(out.matrix);
  out.provenance = "file:" + path;
  return out;
}

}  // namespace sompkit::dictionary
