#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sompkit/coherence.hpp"
#include "sompkit/dense_matrix.hpp"

namespace sompkit::dictionary {

/// M x N measurement matrix with unit-norm columns, its coherence
/// summary, and a record of how it was generated.
struct MeasurementMatrix {
  DenseMatrix matrix;
  coherence::CoherenceReport coherence;
  std::string provenance;

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
};

/// Row-sparse coefficient matrix: sorted support plus the L x d block of
/// nonzero rows. c_min/c_max are the realized min/max row l2 norms.
struct RowSparseSignal {
  int n_cols_total = 0;
  std::vector<int> support;
  DenseMatrix coeffs;
  double c_min = 0.0;
  double c_max = 0.0;
};

/// Tagged noise generator description.
struct NoiseSpec {
  enum class Kind { gaussian, spectral_bounded };
  Kind kind = Kind::gaussian;
  double level = 1.0;  // sigma for gaussian, epsilon for spectral_bounded
  int rows = 0;
  int cols = 0;

  static NoiseSpec gaussian(double sigma, int m, int d);
  static NoiseSpec spectral_bounded(double epsilon, int m, int d);
};

/// Knobs of the coherence-minimizing design iteration.
struct DesignParams {
  int iters = 300;                ///< Gram-shrinkage passes (stage one)
  double shrink = 0.95;           ///< off-diagonal shrink factor per pass
  double shrink_quantile = 0.80;  ///< magnitudes above this quantile get shrunk
  double improve_tol = 1e-5;      ///< stop when mu improves less than this ...
  int patience = 50;              ///< ... over this many iterations
  int polish_steps = 2500;        ///< smoothed-max descent steps per beta stage
  double polish_rate = 2e-4;      ///< descent step size
};

/// i.i.d. standard-normal entries with columns scaled to unit norm.
MeasurementMatrix gaussian_matrix(int m, int n, std::uint64_t seed);

/// Two-stage coherence minimization. Stage one is an iterative Gram
/// shrinkage: shrink large off-diagonal Gram entries, project back to
/// rank M by truncated eigen-decomposition, renormalize. Stage two
/// descends a smoothed maximum (softmax over squared inner products,
/// with a sharpening schedule) under the unit-column constraint, which
/// pushes the plateau the shrinkage loop reaches down to the
/// near-Welch regime. Returns the best-coherence iterate seen by either
/// stage. The square case returns an orthonormal basis directly
/// (coherence zero is attainable there and the iteration cannot reach
/// it within the stopping rule).
MeasurementMatrix design_low_coherence(int m, int n, const DesignParams& params,
                                       std::uint64_t seed);

/// Support drawn uniformly without replacement; every nonzero entry is
/// +-sqrt(c_min^2/d) with independent fair signs, so every support row
/// has l2 norm c_min exactly.
RowSparseSignal gen_signal(int n, int sparsity, int d, double c_min, std::uint64_t seed);

/// Per-row target norms uniform on [c_min, c_max]; row directions are
/// i.i.d. gaussian scaled to the target norm.
RowSparseSignal gen_signal_dynamic_range(int n, int sparsity, int d, double c_min,
                                         double c_max, std::uint64_t seed);

/// Gaussian kind: i.i.d. N(0, sigma^2) entries. SpectralBounded kind: a
/// standard gaussian draw rescaled so its spectral norm equals epsilon
/// exactly (the worst case over the noise ball).
DenseMatrix sample_noise(const NoiseSpec& spec, std::uint64_t seed);

/// Noiseless observation Phi * C restricted to the support rows of C.
DenseMatrix synthesize(const DenseMatrix& phi, const RowSparseSignal& signal);

/// Text format: header line "M N", then M lines of N space-separated
/// decimals with 17 significant digits (round-trip exact for doubles).
void save_matrix(const std::string& path, const DenseMatrix& matrix);
DenseMatrix load_matrix(const std::string& path);

/// Wraps a loaded file as a MeasurementMatrix (checks unit columns,
/// computes the coherence report).
MeasurementMatrix measurement_matrix_from_file(const std::string& path);

}  // namespace sompkit::dictionary
