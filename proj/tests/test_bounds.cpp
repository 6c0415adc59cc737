#include <doctest.h>

#include <cmath>

#include "sompkit/bounds.hpp"
#include "sompkit/tracy_widom.hpp"

namespace bnd = sompkit::bounds;
namespace tw = sompkit::tracy_widom;
using sompkit::dictionary::NoiseSpec;

namespace {
constexpr double kMu = 0.0782;
constexpr int kL = 4;
}  // namespace

TEST_CASE("bounded-noise row-norm threshold") {
  CHECK(bnd::cmin_threshold_bounded(0.0, 5, 0.05) == doctest::Approx(0.0));
  CHECK(bnd::cmin_threshold_bounded(1.0, kL, kMu) ==
        doctest::Approx(2.0 / (1.0 - 7.0 * kMu)).epsilon(1e-12));
  CHECK_THROWS_AS(bnd::cmin_threshold_bounded(1.0, 4, 0.2), sompkit::feasibility_error);
}

TEST_CASE("bounded-noise level threshold and its inversion") {
  CHECK(bnd::epsilon_threshold_bounded(0.0, kL, kMu) == doctest::Approx(0.0));
  const double eps = bnd::epsilon_threshold_bounded(2.0, kL, kMu);
  CHECK(eps == doctest::Approx(2.0 * (1.0 - 7.0 * kMu) / 2.0).epsilon(1e-12));
  CHECK(eps == doctest::Approx(0.4526).epsilon(1e-3));
  // inversion consistency with the c_min threshold
  CHECK(bnd::cmin_threshold_bounded(eps, kL, kMu) == doctest::Approx(2.0).epsilon(1e-12));
  // larger coherence leaves less room for noise
  CHECK(bnd::epsilon_threshold_bounded(2.0, kL, kMu + 0.01) < eps);
}

TEST_CASE("frobenius comparison threshold dominates the spectral one") {
  // equal norms (rank-one noise) coincide
  CHECK(bnd::cmin_threshold_frobenius(1.0, kL, kMu) ==
        doctest::Approx(bnd::cmin_threshold_bounded(1.0, kL, kMu)).epsilon(1e-15));
  // identity-like noise: frobenius = 2x spectral for 4x4
  CHECK(bnd::cmin_threshold_frobenius(2.0, kL, kMu) ==
        doctest::Approx(2.0 * bnd::cmin_threshold_bounded(1.0, kL, kMu)).epsilon(1e-12));
}

TEST_CASE("coherence threshold under bounded noise") {
  CHECK(bnd::mu_threshold_bounded(2.0, 0.0, kL) ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(bnd::mu_threshold_bounded(2.0, 0.4526, kL) == doctest::Approx(kMu).epsilon(1e-3));
  CHECK_THROWS_AS(bnd::mu_threshold_bounded(2.0, 1.0, kL), sompkit::feasibility_error);
}

TEST_CASE("minimum measurements under bounded noise") {
  // noiseless, huge N: the exact formula gives 49 (the (2L-1)^2 + 1 = 50
  // reading is its N -> infinity approximation rounded the other way)
  CHECK(bnd::min_measurements_bounded(1000000, 4, 1.0, 0.0) == 49);
  CHECK(bnd::min_measurements_bounded(200, 1, 1.0, 0.0) == 2);
  const int noisy = bnd::min_measurements_bounded(200, 4, 10.0, 1.0);
  const int noiseless = bnd::min_measurements_bounded(200, 4, 10.0, 0.0);
  CHECK(noisy > noiseless);
  CHECK(noisy <= 200);
}

TEST_CASE("generic SRP lower bound evaluates the CDF at the margin") {
  // the margin c_min (1 - (2L-1) mu) / 2 here is about 0.4526: noise
  // bounded below it gives a certain recovery, above it no guarantee
  const auto certain = bnd::srp_lower_bound_generic(
      [](double x) { return x >= 0.4 ? 1.0 : 0.0; }, 2.0, kL, kMu);
  CHECK(certain.value == doctest::Approx(1.0));
  const auto beyond = bnd::srp_lower_bound_generic(
      [](double x) { return x >= 0.9 ? 1.0 : 0.0; }, 2.0, kL, kMu);
  CHECK(beyond.value == doctest::Approx(0.0));
  const auto hopeless =
      bnd::srp_lower_bound_generic([](double) { return 0.0; }, 2.0, kL, kMu);
  CHECK(hopeless.value == doctest::Approx(0.0));
  CHECK_THROWS_AS(bnd::srp_lower_bound_generic([](double) { return 1.0; }, 2.0, 8, 0.0782),
                  sompkit::feasibility_error);
}

TEST_CASE("gaussian SRP bound equals the generic bound fed the TW cdf") {
  const int m = 100, d = 4;
  const double sigma = 0.1, c_min = 2.0;
  const auto direct = bnd::srp_lower_bound_gaussian(c_min, kL, kMu, sigma, m, d);
  const auto composed = bnd::srp_lower_bound_generic(
      [&](double x) { return tw::spectral_norm_cdf(x, {m, d, sigma}); }, c_min, kL, kMu);
  CHECK(direct.value == doctest::Approx(composed.value).epsilon(1e-15));
  CHECK(direct.method == bnd::Method::tracy_widom);
  CHECK(!direct.caveat.empty());
}

TEST_CASE("gaussian SRP bound limits") {
  CHECK(bnd::srp_lower_bound_gaussian(2.0, kL, kMu, 1e-6, 100, 4).value >
        1.0 - 1e-9);
  CHECK(bnd::srp_lower_bound_gaussian(0.0, kL, kMu, 0.5, 100, 4).value < 1e-9);
}

TEST_CASE("gaussian thresholds: inversion identities") {
  const int m = 100, d = 4;
  const double delta = 1e-3;
  const double sigma = 0.1;
  const double c_star = bnd::cmin_threshold_gaussian(delta, sigma, m, d, kL, kMu);
  // solving back for sigma returns the input
  CHECK(bnd::sigma_threshold_gaussian(delta, c_star, m, d, kL, kMu) ==
        doctest::Approx(sigma).epsilon(1e-9));
  // the SRP bound at the threshold is exactly the target confidence
  CHECK(bnd::srp_lower_bound_gaussian(c_star, kL, kMu, sigma, m, d).value ==
        doctest::Approx(1.0 - delta).epsilon(1e-6));
  // doubling c_min doubles the sigma threshold
  CHECK(bnd::sigma_threshold_gaussian(delta, 4.0, m, d, kL, kMu) ==
        doctest::Approx(2.0 * bnd::sigma_threshold_gaussian(delta, 2.0, m, d, kL, kMu))
            .epsilon(1e-12));
  // tighter delta demands more signal
  CHECK(bnd::cmin_threshold_gaussian(1e-2, sigma, m, d, kL, kMu) < c_star);
  CHECK_THROWS_AS(bnd::cmin_threshold_gaussian(delta, sigma, m, d, 8, 0.0782),
                  sompkit::feasibility_error);
}

TEST_CASE("chernoff coherence threshold") {
  CHECK(bnd::mu_threshold_gaussian_chernoff(2.0, 0.0, 100, 4, 2.6283, kL) ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  const double threshold =
      bnd::mu_threshold_gaussian_chernoff(2.0, 0.01, 100, 4, 2.6283, kL);
  CHECK(threshold == doctest::Approx((1.0 - 2.0 * 14.6283 * 0.01 / 2.0) / 7.0)
                         .epsilon(1e-4));
  // more confidence (larger t) shrinks the admissible coherence
  CHECK(bnd::mu_threshold_gaussian_chernoff(2.0, 0.01, 100, 4, 4.0, kL) < threshold);
  CHECK_THROWS_AS(bnd::mu_threshold_gaussian_chernoff(2.0, 1.0, 100, 4, 2.6283, kL),
                  sompkit::feasibility_error);
}

TEST_CASE("vector-count threshold under the chernoff route") {
  const double t = 2.6283;
  // sigma -> 0: a single vector suffices
  const auto tiny = bnd::d_threshold_chernoff(1.0, 1e-9, 100, kL, kMu, t);
  CHECK(tiny.exact < 1e-12);
  const auto at01 = bnd::d_threshold_chernoff(1.0, 0.1, 100, kL, kMu, t);
  const auto at02 = bnd::d_threshold_chernoff(1.0, 0.2, 100, kL, kMu, t);
  CHECK(at01.exact >= at01.small_sigma_approx);
  CHECK(at02.exact >= at02.small_sigma_approx);
  // doubling sigma roughly quadruples the approximate threshold
  CHECK(at02.small_sigma_approx ==
        doctest::Approx(4.0 * at01.small_sigma_approx).epsilon(1e-12));
  CHECK_THROWS_AS(bnd::d_threshold_chernoff(1.0, 10.0, 100, kL, kMu, t),
                  sompkit::feasibility_error);
}

TEST_CASE("threshold-stopping tau per noise model") {
  CHECK(bnd::sompt_threshold(NoiseSpec::spectral_bounded(1.0, 100, 4), std::nullopt) ==
        doctest::Approx(1.0));
  const auto gaussian = NoiseSpec::gaussian(1.0, 100, 4);
  CHECK(bnd::sompt_threshold(gaussian, 1e-3, bnd::TauVariant::chernoff_quantile) ==
        doctest::Approx(std::sqrt(std::log(1000.0)) + 12.0).epsilon(1e-10));
  CHECK(bnd::sompt_threshold(gaussian, 1e-3) ==
        doctest::Approx(tw::spectral_norm_quantile(0.999, {100, 4, 1.0})).epsilon(1e-12));
  CHECK_THROWS_AS(bnd::sompt_threshold(gaussian, std::nullopt), sompkit::domain_error);
}

TEST_CASE("thresholds move monotonically with the inputs") {
  double prev_cmin = 0.0;
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    const double c = bnd::cmin_threshold_bounded(eps, kL, kMu);
    CHECK(c > prev_cmin);
    prev_cmin = c;
  }
  double prev = 0.0;
  for (int sparsity : {1, 2, 3, 4, 5, 6}) {
    const double c = bnd::cmin_threshold_bounded(1.0, sparsity, kMu);
    CHECK(c > prev);
    prev = c;
  }
  prev = 0.0;
  for (double mu : {0.01, 0.04, 0.08, 0.12}) {
    const double c = bnd::cmin_threshold_bounded(1.0, kL, mu);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("infeasible coherence always raises, never returns garbage") {
  const double bad_mu = 1.0 / 7.0;  // exactly at the boundary for L = 4
  CHECK_THROWS_AS(bnd::cmin_threshold_bounded(1.0, kL, bad_mu), sompkit::feasibility_error);
  CHECK_THROWS_AS(bnd::epsilon_threshold_bounded(1.0, kL, bad_mu),
                  sompkit::feasibility_error);
  CHECK_THROWS_AS(bnd::srp_lower_bound_gaussian(2.0, kL, bad_mu, 0.1, 100, 4),
                  sompkit::feasibility_error);
  CHECK_THROWS_AS(bnd::sigma_threshold_gaussian(1e-3, 2.0, 100, 4, kL, bad_mu),
                  sompkit::feasibility_error);
  CHECK_THROWS_AS(bnd::d_threshold_chernoff(1.0, 0.1, 100, kL, bad_mu, 2.0),
                  sompkit::feasibility_error);
}
