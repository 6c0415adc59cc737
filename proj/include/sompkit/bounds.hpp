#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sompkit/dictionary.hpp"
#include "sompkit/tracy_widom.hpp"

namespace sompkit::bounds {

/// How an SRP lower bound or threshold was computed.
enum class Method { tracy_widom, chernoff, generic_cdf };

const char* method_name(Method m);

/// Lower bound on the successful-recovery probability. `value` is
/// clamped to [0, 1]; `raw` keeps the unclamped composition for
/// diagnostics. The Tracy-Widom route is asymptotic; its second-order
/// term decays like d^(-2/3) with unknown constants, so it is reported
/// as `caveat` text rather than a number.
struct SrpBound {
  double value = 0.0;
  double raw = 0.0;
  Method method = Method::generic_cdf;
  std::string caveat;
};

/// All calculators require mu < 1/(2L-1); outside that feasibility
/// region they throw feasibility_error instead of returning a negative
/// or NaN threshold. Thresholds are boundary values: the guarantee holds
/// strictly above (below, for noise-level thresholds) the returned value.

/// Smallest row-norm floor that guarantees exact recovery under noise
/// with spectral norm at most epsilon: 2 eps / (1 - (2L-1) mu). Applies
/// to both the sparsity-stopped and threshold-stopped variants.
double cmin_threshold_bounded(double epsilon, int sparsity, double mu);

/// The same guarantee solved for the noise level: c_min (1-(2L-1)mu)/2.
double epsilon_threshold_bounded(double c_min, int sparsity, double mu);

/// Comparison bound with the Frobenius norm in place of the spectral
/// norm; never smaller than the spectral-norm threshold.
double cmin_threshold_frobenius(double noise_frobenius, int sparsity, double mu);

/// Coherence level below which recovery is guaranteed at a given noise
/// level: (1 - 2 ||N||_2 / c_min) / (2L - 1). Requires noise < c_min/2.
double mu_threshold_bounded(double c_min, double noise_l2, int sparsity);

/// Minimum measurement count for a Welch-bound-achieving matrix:
/// smallest integer strictly greater than
/// N / (((1 - 2||N||_2/c_min)/(2L-1))^2 (N-1) + 1), capped at N.
int min_measurements_bounded(int n, int sparsity, double c_min, double noise_l2);

/// P_s >= F_N(c_min (1-(2L-1)mu) / 2) for any distribution of the noise
/// spectral norm with CDF F_N.
SrpBound srp_lower_bound_generic(const std::function<double(double)>& noise_cdf,
                                 double c_min, int sparsity, double mu);

/// Gaussian-noise specialization through the Tracy-Widom CDF:
/// F1(((1-(2L-1)mu)^2 c_min^2 - 4 sigma^2 mu_md) / (4 sigma^2 sigma_md)).
SrpBound srp_lower_bound_gaussian(double c_min, int sparsity, double mu, double sigma,
                                  int m, int d);

/// Row-norm floor for SRP >= 1-delta under gaussian noise:
/// 2 sqrt((F1^{-1}(1-delta) sigma_md + mu_md) sigma^2) / (1 - (2L-1)mu).
double cmin_threshold_gaussian(double delta, double sigma, int m, int d, int sparsity,
                               double mu);

/// The same condition solved for sigma.
double sigma_threshold_gaussian(double delta, double c_min, int m, int d, int sparsity,
                                double mu);

/// Chernoff-route coherence threshold:
/// (1 - 2 (sqrt(M)+sqrt(d)+t) sigma / c_min) / (2L-1).
double mu_threshold_gaussian_chernoff(double c_min, double sigma, int m, int d, double t,
                                      int sparsity);

struct VectorCountThreshold {
  double exact;              ///< (sqrt(M)+t)^2 / (sqrt(c_m)(1-(2L-1)mu)/(2 sigma) - 1)^2
  double small_sigma_approx; ///< 4 (sqrt(M)+t)^2 sigma^2 / ((1-(2L-1)mu)^2 c_m)
};

/// Number of sparse vectors needed for the Chernoff-route guarantee when
/// c_min^2 = d c_m. Requires sqrt(c_m)(1-(2L-1)mu)/(2 sigma) > 1.
VectorCountThreshold d_threshold_chernoff(double c_m, double sigma, int m, int sparsity,
                                          double mu, double t);

enum class TauVariant { tw_quantile, chernoff_quantile };

/// Stopping threshold for the threshold-stopped variant: epsilon for
/// bounded noise; for gaussian noise the 1-delta quantile of ||N||_2
/// under the chosen approximation (delta required).
double sompt_threshold(const dictionary::NoiseSpec& spec, std::optional<double> delta,
                       TauVariant variant = TauVariant::tw_quantile);

/// t and delta are interconvertible; the API takes delta everywhere.
inline double t_from_delta(double delta) { return std::sqrt(std::log(1.0 / delta)); }

}  // namespace sompkit::bounds
