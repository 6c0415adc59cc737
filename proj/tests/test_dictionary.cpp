#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "sompkit/dictionary.hpp"
#include "sompkit/numerics.hpp"
#include "test_helpers.hpp"

using sompkit::DenseMatrix;
namespace dict = sompkit::dictionary;

TEST_CASE("gaussian matrix: unit columns and determinism") {
  const auto a = dict::gaussian_matrix(4, 4, 9);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(a.matrix.col(j).norm() - 1.0) < 1e-12);
  }
  const auto b = dict::gaussian_matrix(100, 200, 77);
  const auto c = dict::gaussian_matrix(100, 200, 77);
  CHECK(b.matrix == c.matrix);  // bit-identical
  CHECK_THROWS_AS(dict::gaussian_matrix(5, 4, 0), sompkit::dimension_error);
}

TEST_CASE("gaussian matrix coherence concentrates near the log heuristic") {
  const double heuristic = 2.0 * std::sqrt(std::log(200.0) / 100.0);
  double mean = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = dict::gaussian_matrix(100, 200, seed);
    CHECK(a.coherence.mu >= a.coherence.welch_lower_bound);
    CHECK(a.coherence.mu < 1.0);
    mean += a.coherence.mu;
  }
  mean /= 50.0;
  CHECK(mean > 0.7 * heuristic);
  CHECK(mean < 1.3 * heuristic);
}

TEST_CASE("design: square case returns an orthonormal basis") {
  const auto a = dict::design_low_coherence(12, 12, {}, 3);
  CHECK(a.coherence.mu <= 1e-8);
  CHECK((a.matrix.transpose() * a.matrix - DenseMatrix::Identity(12, 12))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("design: small rectangular case beats the gaussian start") {
  dict::DesignParams params;
  params.iters = 120;
  params.polish_steps = 400;
  const auto designed = dict::design_low_coherence(32, 48, params, 0);
  const auto raw = dict::gaussian_matrix(32, 48, 0);
  CHECK(designed.coherence.mu < raw.coherence.mu);
  CHECK(designed.coherence.mu >= designed.coherence.welch_lower_bound - 1e-12);
  // determinism of the whole pipeline
  const auto again = dict::design_low_coherence(32, 48, params, 0);
  CHECK(designed.matrix == again.matrix);
}

TEST_CASE("equal-norm signal: full support, exact row norms, magnitudes") {
  const auto full = dict::gen_signal(10, 10, 1, 1.0, 5);
  CHECK(full.support.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(std::abs(std::abs(full.coeffs(i, 0)) - 1.0) < 1e-15);
  }

  const auto s = dict::gen_signal(200, 4, 4, 2.0, 6);
  CHECK(s.support.size() == 4);
  CHECK(std::is_sorted(s.support.begin(), s.support.end()));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(s.coeffs.row(i).norm() - 2.0) < 1e-12);
    for (int j = 0; j < 4; ++j) {
      // entries are +-sqrt(c_min^2/d) = +-1 here
      CHECK(std::abs(std::abs(s.coeffs(i, j)) - 1.0) < 1e-15);
    }
  }
  CHECK(s.c_min == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.c_max == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(dict::gen_signal(10, 11, 1, 1.0, 0), sompkit::domain_error);
}

TEST_CASE("equal-norm signal support is uniform") {
  std::vector<long> hits(10, 0);
  const long draws = 100000;
  for (long k = 0; k < draws; ++k) {
    const auto s = dict::gen_signal(10, 2, 1, 1.0, static_cast<std::uint64_t>(k));
    for (int idx : s.support) hits[static_cast<std::size_t>(idx)]++;
  }
  for (int idx = 0; idx < 10; ++idx) {
    const double freq = static_cast<double>(hits[static_cast<std::size_t>(idx)]) /
                        static_cast<double>(draws);
    CAPTURE(idx);
    CHECK(freq == doctest::Approx(0.2).epsilon(0.05));  // 0.2 +- 0.01
  }
}

TEST_CASE("dynamic-range signal: degenerate interval and range containment") {
  const auto equal = dict::gen_signal_dynamic_range(50, 3, 4, 2.0, 2.0, 11);
  for (int i = 0; i < 3; ++i) {
    CHECK(equal.coeffs.row(i).norm() == doctest::Approx(2.0).epsilon(1e-12));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = dict::gen_signal_dynamic_range(50, 4, 3, 1.0, 4.0, seed);
    CHECK(s.c_min >= 1.0 - 1e-12);
    CHECK(s.c_max <= 4.0 + 1e-12);
  }
  CHECK_THROWS_AS(dict::gen_signal_dynamic_range(50, 3, 4, 3.0, 2.0, 0),
                  sompkit::domain_error);
}

TEST_CASE("dynamic-range signal: mean minimum row norm matches order statistics") {
  // min of 4 uniforms on [2,4] has mean 2 + 2/5
  double mean = 0.0;
  const int draws = 2000;
  for (int k = 0; k < draws; ++k) {
    mean += dict::gen_signal_dynamic_range(100, 4, 4, 2.0, 4.0,
                                           static_cast<std::uint64_t>(k))
                .c_min;
  }
  mean /= draws;
  CHECK(mean == doctest::Approx(2.4).epsilon(0.025));
}

TEST_CASE("noise: spectral-bounded draw is pinned to epsilon") {
  const auto spec = dict::NoiseSpec::spectral_bounded(1.0, 30, 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseMatrix noise = dict::sample_noise(spec, seed);
    CHECK(std::abs(sompkit::numerics::spectral_norm(noise) - 1.0) < 1e-10);
  }
}

TEST_CASE("noise: gaussian scalar variance") {
  const auto spec = dict::NoiseSpec::gaussian(0.7, 1, 1);
  double sum = 0.0, sum2 = 0.0;
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const double v = dict::sample_noise(spec, static_cast<std::uint64_t>(k))(0, 0);
    sum += v;
    sum2 += v * v;
  }
  const double variance = sum2 / draws - (sum / draws) * (sum / draws);
  CHECK(variance == doctest::Approx(0.49).epsilon(0.03));
}

TEST_CASE("noise: gaussian spectral norm is unbounded across seeds") {
  const auto spec = dict::NoiseSpec::gaussian(1.0, 8, 2);
  double largest = 0.0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    largest = std::max(largest,
                       sompkit::numerics::spectral_norm(dict::sample_noise(spec, seed)));
  }
  // comfortably above the bulk scale sqrt(M) + sqrt(d)
  CHECK(largest > std::sqrt(8.0) + std::sqrt(2.0) + 1.0);
}

TEST_CASE("matrix save/load round-trips exactly") {
  const std::string path = "roundtrip_matrix_test.txt";
  for (std::uint32_t seed = 0; seed < 5; ++seed) {
    const DenseMatrix a = testutil::to_eigen(oracle::random_matrix(7, 5, 900 + seed));
    dict::save_matrix(path, a);
    const DenseMatrix b = dict::load_matrix(path);
    REQUIRE(b.rows() == a.rows());
    REQUIRE(b.cols() == a.cols());
    CHECK(a == b);  // bit-exact via 17 significant digits
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(dict::load_matrix("does_not_exist_matrix.txt"), sompkit::io_error);
}

TEST_CASE("synthesize applies only the support rows") {
  const DenseMatrix phi = testutil::random_unit_columns(6, 10, 42);
  dict::RowSparseSignal signal;
  signal.n_cols_total = 10;
  signal.support = {2, 7};
  signal.coeffs = DenseMatrix(2, 3);
  signal.coeffs << 1, 0, -1, 2, 1, 0;
  const DenseMatrix y = dict::synthesize(phi, signal);
  const DenseMatrix expected = phi.col(2) * signal.coeffs.row(0) +
                               phi.col(7) * signal.coeffs.row(1);
  CHECK((y - expected).cwiseAbs().maxCoeff() < 1e-14);
}
