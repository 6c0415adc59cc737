#pragma once

#include <utility>

#include "sompkit/errors.hpp"

namespace sompkit::tracy_widom {

/// The embedded (s, F1(s)) grid. Strictly increasing values covering
/// [-10, 9.5], dense (step <= 0.01) over the operating range [-5, 3].
struct Tw1Table {
  const double* s_grid;
  const double* f1_values;
  int size;
  const char* source;
};

const Tw1Table& table();

/// Tracy-Widom beta=1 CDF via monotone cubic interpolation on the
/// embedded table; clamped to [1e-12, 1 - 1e-12] outside the grid.
double f1_cdf(double s);

/// Inverse of f1_cdf by bisection; |f1_cdf(result) - p| <= 1e-9 for any
/// p the grid span can attain. Requires 0 < p < 1.
double f1_quantile(double p);

/// Centering and scaling constants standardizing ||N||_2^2 / sigma^2:
///   mu = (sqrt(M - 1/2) + sqrt(d - 1/2))^2
///   sigma = (sqrt(M - 1/2) + sqrt(d - 1/2)) *
///           (1/sqrt(M - 1/2) + 1/sqrt(d - 1/2))^(1/3)
std::pair<double, double> centering_constants(int m, int d);

/// Distribution model for the spectral norm of an M x d matrix with
/// i.i.d. N(0, sigma^2) entries. The centering constants are recomputed
/// from (m, d) on every read.
struct GaussianNormModel {
  int m = 1;
  int d = 1;
  double sigma = 1.0;

  double mu_md() const { return centering_constants(m, d).first; }
  double sigma_md() const { return centering_constants(m, d).second; }
};

/// Pr(||N||_2 <= x) under the Tracy-Widom approximation:
/// F1((x^2/sigma^2 - mu_md) / sigma_md).
double spectral_norm_cdf(double x, const GaussianNormModel& model);

/// Quantile of the same approximation:
/// sqrt((F1^{-1}(p) sigma_md + mu_md) sigma^2).
double spectral_norm_quantile(double p, const GaussianNormModel& model);

/// Chernoff-type concentration alternative: sigma (sqrt(ln(1/delta)) +
/// sqrt(M) + sqrt(d)) satisfies Pr(||N||_2 <= result) >= 1 - delta.
double chernoff_spectral_quantile(double delta, int m, int d, double sigma);

namespace detail {
extern const int kTw1TableSize;
extern const double kTw1Grid[];
extern const double kTw1Cdf[];
extern const char* const kTw1SourceTag;
}  // namespace detail

}  // namespace sompkit::tracy_widom
