#include "sompkit/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sompkit::tracy_widom {

namespace {

constexpr double kLeftClamp = 1e-12;
constexpr double kRightClamp = 1.0 - 1e-12;

// Fritsch-Carlson monotone cubic slopes; strictly increasing data gives
// a monotone interpolant.
std::vector<double> pchip_slopes(const double* x, const double* y, int n) {
  std::vector<double> h(static_cast<std::size_t>(n - 1));
  std::vector<double> delta(static_cast<std::size_t>(n - 1));
  for (int k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    delta[k] = (y[k + 1] - y[k]) / h[k];
  }
  std::vector<double> m(static_cast<std::size_t>(n));
  for (int k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) {
      m[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      m[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
    }
  }
  auto endpoint = [](double ha, double hb, double da, double db) {
    double slope = ((2.0 * ha + hb) * da - ha * db) / (ha + hb);
    if (slope * da <= 0.0) {
      slope = 0.0;
    } else if (da * db <= 0.0 && std::abs(slope) > 3.0 * std::abs(da)) {
      slope = 3.0 * da;
    }
    return slope;
  };
  m[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  m[static_cast<std::size_t>(n - 1)] =
      endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return m;
}

struct Interpolant {
  const double* x;
  const double* y;
  int n;
  std::vector<double> slopes;

  double operator()(double s) const {
    const double* hi = std::upper_bound(x, x + n, s);
    int k = static_cast<int>(hi - x) - 1;
    k = std::clamp(k, 0, n - 2);
    const double h = x[k + 1] - x[k];
    const double t = (s - x[k]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y[k] + h * h10 * slopes[static_cast<std::size_t>(k)] + h01 * y[k + 1] +
           h * h11 * slopes[static_cast<std::size_t>(k + 1)];
  }
};

const Interpolant& interpolant() {
  static const Interpolant interp = [] {
    Interpolant out{detail::kTw1Grid, detail::kTw1Cdf, detail::kTw1TableSize, {}};
    out.slopes = pchip_slopes(out.x, out.y, out.n);
    return out;
  }();
  return interp;
}

}  // namespace

const Tw1Table& table() {
  static const Tw1Table t{detail::kTw1Grid, detail::kTw1Cdf, detail::kTw1TableSize,
                          detail::kTw1SourceTag};
  return t;
}

double f1_cdf(double s) {
  const Tw1Table& t = table();
  if (s < t.s_grid[0]) return kLeftClamp;
  if (s > t.s_grid[t.size - 1]) return kRightClamp;
  return interpolant()(s);
}

double f1_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw domain_error("f1_quantile: p must lie in (0, 1)");
  }
  const Tw1Table& t = table();
  double lo = t.s_grid[0];
  double hi = t.s_grid[t.size - 1];
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f1_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> centering_constants(int m, int d) {
  if (m < 1 || d < 1) {
    throw domain_error("centering_constants: need M >= 1 and d >= 1");
  }
  const double a = std::sqrt(m - 0.5);
  const double b = std::sqrt(d - 0.5);
  const double mu = (a + b) * (a + b);
  const double sigma = (a + b) * std::cbrt(1.0 / a + 1.0 / b);
  return {mu, sigma};
}

double spectral_norm_cdf(double x, const GaussianNormModel& model) {
  if (x < 0.0) throw domain_error("spectral_norm_cdf: x must be nonnegative");
  if (!(model.sigma > 0.0)) throw domain_error("spectral_norm_cdf: sigma must be positive");
  const auto [mu, scale] = centering_constants(model.m, model.d);
  const double z = x / model.sigma;
  return f1_cdf((z * z - mu) / scale);
}

double spectral_norm_quantile(double p, const GaussianNormModel& model) {
  if (!(model.sigma > 0.0)) {
    throw domain_error("spectral_norm_quantile: sigma must be positive");
  }
  const auto [mu, scale] = centering_constants(model.m, model.d);
  const double radicand = f1_quantile(p) * scale + mu;
  if (!(radicand > 0.0)) {
    throw domain_error("spectral_norm_quantile: nonpositive radicand");
  }
  return model.sigma * std::sqrt(radicand);
}

double chernoff_spectral_quantile(double delta, int m, int d, double sigma) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw domain_error("chernoff_spectral_quantile: delta must lie in (0, 1)");
  }
  if (m < 1 || d < 1) {
    throw domain_error("chernoff_spectral_quantile: dims must be positive");
  }
  if (!(sigma > 0.0)) {
    throw domain_error("chernoff_spectral_quantile: sigma must be positive");
  }
  const double t = std::sqrt(std::log(1.0 / delta));
  return sigma * (t + std::sqrt(static_cast<double>(m)) + std::sqrt(static_cast<double>(d)));
}

}  // namespace sompkit::tracy_widom
