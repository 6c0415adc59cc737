#include "sompkit/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sompkit::bounds {

namespace {

constexpr const char* kAsymptoticCaveat =
    "asymptotic in (M, d); second-order error decays like d^(-2/3) with unknown constants";

// 1 - (2L-1) mu, guarded by the shared feasibility condition.
double feasibility_margin(int sparsity, double mu) {
  if (sparsity < 1) throw domain_error("sparsity must be positive");
  if (mu < 0.0) throw domain_error("mu must be nonnegative");
  const double margin = 1.0 - (2.0 * sparsity - 1.0) * mu;
  if (!(margin > 0.0)) {
    throw feasibility_error("mu >= 1/(2L-1): the coherence-based guarantee is vacuous");
  }
  return margin;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::tracy_widom: return "tracy_widom";
    case Method::chernoff: return "chernoff";
    case Method::generic_cdf: return "generic_cdf";
  }
  return "unknown";
}

double cmin_threshold_bounded(double epsilon, int sparsity, double mu) {
  if (epsilon < 0.0) throw domain_error("epsilon must be nonnegative");
  return 2.0 * epsilon / feasibility_margin(sparsity, mu);
}

double epsilon_threshold_bounded(double c_min, int sparsity, double mu) {
  if (c_min < 0.0) throw domain_error("c_min must be nonnegative");
  return c_min * feasibility_margin(sparsity, mu) / 2.0;
}

double cmin_threshold_frobenius(double noise_frobenius, int sparsity, double mu) {
  if (noise_frobenius < 0.0) throw domain_error("noise norm must be nonnegative");
  return 2.0 * noise_frobenius / feasibility_margin(sparsity, mu);
}

double mu_threshold_bounded(double c_min, double noise_l2, int sparsity) {
  if (sparsity < 1) throw domain_error("sparsity must be positive");
  if (!(c_min > 0.0)) throw domain_error("c_min must be positive");
  if (noise_l2 < 0.0) throw domain_error("noise norm must be nonnegative");
  if (noise_l2 >= c_min / 2.0) {
    throw feasibility_error("noise level >= c_min/2: no positive coherence threshold exists");
  }
  return (1.0 - 2.0 * noise_l2 / c_min) / (2.0 * sparsity - 1.0);
}

int min_measurements_bounded(int n, int sparsity, double c_min, double noise_l2) {
  if (n < 1) throw domain_error("n must be positive");
  const double theta = mu_threshold_bounded(c_min, noise_l2, sparsity);
  const double rhs = n / (theta * theta * (n - 1) + 1.0);
  const int required = static_cast<int>(std::floor(rhs)) + 1;
  return std::min(required, n);
}

SrpBound srp_lower_bound_generic(const std::function<double(double)>& noise_cdf,
                                 double c_min, int sparsity, double mu) {
  if (c_min < 0.0) throw domain_error("c_min must be nonnegative");
  const double margin = feasibility_margin(sparsity, mu);
  SrpBound bound;
  bound.method = Method::generic_cdf;
  bound.raw = noise_cdf(c_min * margin / 2.0);
  bound.value = std::clamp(bound.raw, 0.0, 1.0);
  return bound;
}

SrpBound srp_lower_bound_gaussian(double c_min, int sparsity, double mu, double sigma,
                                  int m, int d) {
  if (c_min < 0.0) throw domain_error("c_min must be nonnegative");
  if (!(sigma > 0.0)) throw domain_error("sigma must be positive");
  const double margin = feasibility_margin(sparsity, mu);
  const auto [mu_md, sigma_md] = tracy_widom::centering_constants(m, d);
  const double arg =
      (margin * margin * c_min * c_min - 4.0 * sigma * sigma * mu_md) /
      (4.0 * sigma * sigma * sigma_md);
  SrpBound bound;
  bound.method = Method::tracy_widom;
  bound.caveat = kAsymptoticCaveat;
  bound.raw = tracy_widom::f1_cdf(arg);
  bound.value = std::clamp(bound.raw, 0.0, 1.0);
  return bound;
}

double cmin_threshold_gaussian(double delta, double sigma, int m, int d, int sparsity,
                               double mu) {
  const double margin = feasibility_margin(sparsity, mu);
  if (!(delta > 0.0) || !(delta < 1.0)) throw domain_error("delta must lie in (0, 1)");
  const double quantile =
      tracy_widom::spectral_norm_quantile(1.0 - delta, {m, d, sigma});
  return 2.0 * quantile / margin;
}

double sigma_threshold_gaussian(double delta, double c_min, int m, int d, int sparsity,
                                double mu) {
  const double margin = feasibility_margin(sparsity, mu);
  if (!(delta > 0.0) || !(delta < 1.0)) throw domain_error("delta must lie in (0, 1)");
  if (!(c_min > 0.0)) throw domain_error("c_min must be positive");
  const auto [mu_md, sigma_md] = tracy_widom::centering_constants(m, d);
  const double radicand = tracy_widom::f1_quantile(1.0 - delta) * sigma_md + mu_md;
  if (!(radicand > 0.0)) {
    throw domain_error("sigma_threshold_gaussian: nonpositive radicand");
  }
  return c_min * margin / (2.0 * std::sqrt(radicand));
}

double mu_threshold_gaussian_chernoff(double c_min, double sigma, int m, int d, double t,
                                      int sparsity) {
  if (sparsity < 1) throw domain_error("sparsity must be positive");
  if (!(c_min > 0.0)) throw domain_error("c_min must be positive");
  if (sigma < 0.0 || t < 0.0) throw domain_error("sigma and t must be nonnegative");
  const double reach = 2.0 * (std::sqrt(static_cast<double>(m)) +
                              std::sqrt(static_cast<double>(d)) + t) * sigma;
  if (reach >= c_min) {
    throw feasibility_error("2 (sqrt(M)+sqrt(d)+t) sigma >= c_min: no coherence works");
  }
  return (1.0 - reach / c_min) / (2.0 * sparsity - 1.0);
}

VectorCountThreshold d_threshold_chernoff(double c_m, double sigma, int m, int sparsity,
                                          double mu, double t) {
  if (!(c_m > 0.0)) throw domain_error("c_m must be positive");
  if (!(sigma > 0.0)) throw domain_error("sigma must be positive");
  if (t < 0.0) throw domain_error("t must be nonnegative");
  const double margin = feasibility_margin(sparsity, mu);
  const double a = std::sqrt(c_m) * margin / (2.0 * sigma);
  if (!(a > 1.0)) {
    throw feasibility_error(
        "sqrt(c_m)(1-(2L-1)mu)/(2 sigma) <= 1: no finite number of vectors suffices");
  }
  const double base = std::sqrt(static_cast<double>(m)) + t;
  return {base * base / ((a - 1.0) * (a - 1.0)), base * base / (a * a)};
}

double sompt_threshold(const dictionary::NoiseSpec& spec, std::optional<double> delta,
                       TauVariant variant) {
  switch (spec.kind) {
    case dictionary::NoiseSpec::Kind::spectral_bounded:
      return spec.level;
    case dictionary::NoiseSpec::Kind::gaussian: {
      if (!delta.has_value()) {
        throw domain_error("sompt_threshold: gaussian noise requires delta");
      }
      if (variant == TauVariant::chernoff_quantile) {
        return tracy_widom::chernoff_spectral_quantile(*delta, spec.rows, spec.cols,
                                                       spec.level);
      }
      return tracy_widom::spectral_norm_quantile(1.0 - *delta,
                                                 {spec.rows, spec.cols, spec.level});
    }
  }
  throw domain_error("sompt_threshold: unknown noise kind");
}

}  // namespace sompkit::bounds
