#include <doctest.h>

#include <cmath>

#include "sompkit/bounds.hpp"
#include "sompkit/numerics.hpp"
#include "sompkit/somp.hpp"
#include "test_helpers.hpp"

using sompkit::DenseMatrix;
namespace somp = sompkit::somp;
namespace dict = sompkit::dictionary;
namespace num = sompkit::numerics;

namespace {

// one designed dictionary shared across the recovery tests
const dict::MeasurementMatrix& designed_32x48() {
  static const dict::MeasurementMatrix matrix = [] {
    dict::DesignParams params;
    params.iters = 120;
    params.polish_steps = 400;
    return dict::design_low_coherence(32, 48, params, 1);
  }();
  return matrix;
}

DenseMatrix observe(const dict::MeasurementMatrix& phi, const dict::RowSparseSignal& c,
                    const DenseMatrix& noise) {
  return dict::synthesize(phi.matrix, c) + noise;
}

}  // namespace

TEST_CASE("selection scores: zero residual and orthogonal dictionary") {
  const DenseMatrix phi = DenseMatrix::Identity(5, 5);
  const auto zero = somp::selection_scores(phi, DenseMatrix::Zero(5, 2));
  CHECK(zero.argmax == 0);  // tie-break toward the smallest index
  for (double s : zero.scores) CHECK(s == 0.0);

  DenseMatrix residual = DenseMatrix::Zero(5, 3);
  residual.row(3).setOnes();
  const auto scores = somp::selection_scores(phi, residual);
  CHECK(scores.argmax == 3);
}

TEST_CASE("selection scores match the double-loop oracle") {
  const DenseMatrix phi = testutil::random_unit_columns(8, 14, 3);
  const DenseMatrix residual = testutil::to_eigen(oracle::random_matrix(8, 4, 4));
  const auto scores = somp::selection_scores(phi, residual);
  for (int i = 0; i < 14; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
      double dot = 0.0;
      for (int r = 0; r < 8; ++r) dot += phi(r, i) * residual(r, j);
      sum += dot * dot;
    }
    CHECK(scores.scores[static_cast<std::size_t>(i)] ==
          doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
  }
}

TEST_CASE("sparsity-stopped recovery on an orthogonal dictionary is exact") {
  const auto basis = dict::design_low_coherence(16, 16, {}, 2);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto signal = dict::gen_signal(16, 3, 2, 1.0, seed);
    const auto trace =
        somp::somps(basis.matrix, observe(basis, signal, DenseMatrix::Zero(16, 2)), 3);
    CHECK(trace.termination == somp::Termination::sparsity_reached);
    CHECK(somp::recovery_success(trace, signal));
  }
}

TEST_CASE("noiseless recovery on the designed dictionary under the coherence condition") {
  const auto& phi = designed_32x48();
  const double mu = phi.coherence.mu;
  REQUIRE(mu < 1.0 / (2.0 * 4 - 1.0));  // L = 4 feasible
  for (int sparsity : {1, 2, 3, 4}) {
    long successes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto signal = dict::gen_signal(48, sparsity, 3, 1.0, 100 * sparsity + seed);
      const auto trace = somp::somps(
          phi.matrix, observe(phi, signal, DenseMatrix::Zero(32, 3)), sparsity);
      successes += somp::recovery_success(trace, signal) ? 1 : 0;
    }
    CAPTURE(sparsity);
    CHECK(successes == 200);
  }
}

TEST_CASE("bounded noise below the threshold: both variants recover exactly") {
  const auto& phi = designed_32x48();
  const double mu = phi.coherence.mu;
  const int sparsity = 3, d = 3;
  const double epsilon = 0.1;
  const double c_min = 1.1 * sompkit::bounds::cmin_threshold_bounded(epsilon, sparsity, mu);
  const auto spec = dict::NoiseSpec::spectral_bounded(epsilon, 32, d);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto signal = dict::gen_signal(48, sparsity, d, c_min, 7000 + seed);
    const DenseMatrix y = observe(phi, signal, dict::sample_noise(spec, 9000 + seed));
    CAPTURE(seed);
    CHECK(somp::recovery_success(somp::somps(phi.matrix, y, sparsity), signal));
    CHECK(somp::recovery_success(somp::sompt(phi.matrix, y, epsilon), signal));
  }
}

TEST_CASE("recovery traces keep their structural invariants") {
  const auto& phi = designed_32x48();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto signal = dict::gen_signal(48, 4, 2, 1.0, 400 + seed);
    const auto noise =
        dict::sample_noise(dict::NoiseSpec::gaussian(0.05, 32, 2), 500 + seed);
    const DenseMatrix y = observe(phi, signal, noise);
    const auto trace = somp::somps(phi.matrix, y, 4);

    REQUIRE(trace.selected.size() == 4);
    REQUIRE(trace.residual_spectral_norms.size() == 5);
    CHECK(trace.residual_spectral_norms[0] ==
          doctest::Approx(num::spectral_norm(y)).epsilon(1e-12));

    // distinct selections
    auto sorted = trace.support_set();
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    // non-increasing residual spectral norms
    for (std::size_t i = 1; i < trace.residual_spectral_norms.size(); ++i) {
      CHECK(trace.residual_spectral_norms[i] <=
            trace.residual_spectral_norms[i - 1] + 1e-9);
    }

    // residual orthogonal to every selected atom, at every iteration
    const double scale = num::spectral_norm(y);
    for (std::size_t l = 1; l <= trace.selected.size(); ++l) {
      const std::vector<int> prefix(trace.selected.begin(),
                                    trace.selected.begin() + static_cast<long>(l));
      const DenseMatrix residual =
          num::least_squares_residual(sompkit::gather_columns(phi.matrix, prefix), y);
      CHECK((sompkit::gather_columns(phi.matrix, prefix).transpose() * residual)
                .cwiseAbs()
                .maxCoeff() <= 1e-8 * scale);
    }
  }
}

TEST_CASE("threshold-stopped variant: immediate stop, max iterations, cap validation") {
  const auto& phi = designed_32x48();
  const auto signal = dict::gen_signal(48, 2, 2, 1.0, 77);
  const DenseMatrix y = observe(phi, signal, DenseMatrix::Zero(32, 2));

  // guard fails before the first selection
  const auto stopped = somp::sompt(phi.matrix, y, 10.0 * num::spectral_norm(y));
  CHECK(stopped.selected.empty());
  CHECK(stopped.termination == somp::Termination::threshold_reached);
  CHECK(stopped.residual_spectral_norms.size() == 1);

  // unreachable threshold burns through max_iter selections
  const auto exhausted = somp::sompt(phi.matrix, y, 1e-13, 5);
  CHECK(exhausted.termination == somp::Termination::max_iterations);
  CHECK(exhausted.selected.size() == 5);

  CHECK_THROWS_AS(somp::sompt(phi.matrix, y, 0.0, 5), sompkit::domain_error);
  CHECK_THROWS_AS(somp::sompt(phi.matrix, y, 1.0, 33), sompkit::domain_error);
  CHECK_THROWS_AS(somp::somps(phi.matrix, y, 33), sompkit::domain_error);
}

TEST_CASE("an oracle threshold makes both stopping rules agree") {
  const auto& phi = designed_32x48();
  int compared = 0;
  for (std::uint64_t seed = 0; compared < 50; ++seed) {
    const auto signal = dict::gen_signal(48, 4, 3, 2.0, 1000 + seed);
    const auto noise =
        dict::sample_noise(dict::NoiseSpec::gaussian(0.02, 32, 3), 2000 + seed);
    const DenseMatrix y = observe(phi, signal, noise);
    const auto trace = somp::somps(phi.matrix, y, 4);
    if (!somp::recovery_success(trace, signal)) continue;
    const auto& norms = trace.residual_spectral_norms;
    const double final_norm = norms.back();
    const double min_before = *std::min_element(norms.begin(), norms.end() - 1);
    if (final_norm >= min_before) continue;
    const double tau = 0.5 * (final_norm + min_before);
    const auto threshold_trace = somp::sompt(phi.matrix, y, tau);
    CHECK(threshold_trace.termination == somp::Termination::threshold_reached);
    CHECK(threshold_trace.support_set() == trace.support_set());
    ++compared;
  }
  CHECK(compared == 50);
}

TEST_CASE("recovery success is order-insensitive set equality") {
  dict::RowSparseSignal truth;
  truth.support = {1, 2, 3};
  somp::RecoveryTrace trace;
  trace.selected = {3, 1, 2};
  CHECK(somp::recovery_success(trace, truth));
  trace.selected = {1, 2, 3, 4};
  CHECK(!somp::recovery_success(trace, truth));
  trace.selected = {1, 2};
  CHECK(!somp::recovery_success(trace, truth));
  trace.selected = {};
  truth.support = {};
  CHECK(somp::recovery_success(trace, truth));
}

TEST_CASE("iteration diagnostics: full selection and zero noise degenerate") {
  const auto& phi = designed_32x48();
  const auto signal = dict::gen_signal(48, 3, 2, 1.0, 31);
  const DenseMatrix zero_noise = DenseMatrix::Zero(32, 2);
  const auto full =
      somp::diagnostics::iteration_diagnostics(phi.matrix, signal, zero_noise,
                                               signal.support);
  CHECK(full.q1 < 1e-10);
  CHECK(full.q2 < 1e-10);
  CHECK(full.z == 0.0);
  CHECK(full.g > 0.0);

  CHECK_THROWS_AS(somp::diagnostics::iteration_diagnostics(phi.matrix, signal, zero_noise,
                                                           {signal.support[0] + 1 == 48
                                                                ? 0
                                                                : signal.support[0] + 1}),
                  sompkit::precondition_error);
}

TEST_CASE("projected-correlation inequalities hold across random partial selections") {
  const auto& phi = designed_32x48();
  const double mu = phi.coherence.mu;
  const int sparsity = 4;
  int nontrivial_chain = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto signal = dict::gen_signal(48, sparsity, 3, 1.5, 5000 + seed);
    const auto noise =
        dict::sample_noise(dict::NoiseSpec::gaussian(0.05, 32, 3), 6000 + seed);
    const int selected_count = static_cast<int>(seed % sparsity);
    const std::vector<int> partial(signal.support.begin(),
                                   signal.support.begin() + selected_count);
    const auto diag =
        somp::diagnostics::iteration_diagnostics(phi.matrix, signal, noise, partial);

    CAPTURE(seed);
    CHECK(diag.q1 >= 0.0);
    CHECK(diag.q2 >= 0.0);
    CHECK(diag.z >= 0.0);

    // complement correlations never beat the support ones by more than G
    CHECK(diag.q2 <= diag.g * diag.q1 + 1e-9);

    // lower bound on the support correlation from the unselected energy
    std::vector<int> remaining_rows;
    for (int i = 0; i < sparsity; ++i) {
      if (i >= selected_count) remaining_rows.push_back(i);
    }
    DenseMatrix unselected(static_cast<Eigen::Index>(remaining_rows.size()),
                           signal.coeffs.cols());
    for (std::size_t r = 0; r < remaining_rows.size(); ++r) {
      unselected.row(static_cast<Eigen::Index>(r)) = signal.coeffs.row(remaining_rows[r]);
    }
    const double lower = std::pow(sparsity - selected_count, -0.5) *
                         (1.0 - (sparsity - 1) * mu) * unselected.norm();
    CHECK(diag.q1 >= lower - 1e-9);

    // when the margin condition holds, the next greedy pick is correct
    const double margin =
        2.0 * (1.0 - (sparsity - 1) * mu) / (1.0 - (2 * sparsity - 1) * mu);
    if (diag.q1 > margin * diag.z) {
      const DenseMatrix y = observe(phi, signal, noise);
      DenseMatrix residual = y;
      if (!partial.empty()) {
        residual = num::least_squares_residual(sompkit::gather_columns(phi.matrix, partial), y);
      }
      const auto scores = somp::selection_scores(phi.matrix, residual);
      const bool in_support =
          std::find(signal.support.begin(), signal.support.end(), scores.argmax) !=
          signal.support.end();
      CHECK(in_support);
      ++nontrivial_chain;
    }
  }
  // the margin condition must actually fire on a healthy share of draws
  CHECK(nontrivial_chain > 30);
}
