#include <doctest.h>

#include <cmath>

#include "sompkit/coherence.hpp"
#include "sompkit/numerics.hpp"
#include "test_helpers.hpp"

using sompkit::DenseMatrix;
namespace coh = sompkit::coherence;

TEST_CASE("mutual coherence: orthogonal columns give zero") {
  const auto report = coh::mutual_coherence(DenseMatrix::Identity(6, 6));
  CHECK(report.mu == doctest::Approx(0.0));
  CHECK(report.welch_lower_bound == doctest::Approx(0.0));
}

TEST_CASE("mutual coherence: single overlapping pair") {
  DenseMatrix phi(2, 2);
  phi << 1.0, 1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
  const auto report = coh::mutual_coherence(phi);
  CHECK(report.mu == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(report.argmax_pair.first == 0);
  CHECK(report.argmax_pair.second == 1);
}

TEST_CASE("mutual coherence rejects non-unit columns by name") {
  DenseMatrix phi = DenseMatrix::Identity(3, 3);
  phi(0, 1) = 0.5;  // column 1 now has norm > 1
  CHECK_THROWS_WITH_AS(coh::mutual_coherence(phi), doctest::Contains("column 1"),
                       sompkit::normalization_error);
}

TEST_CASE("mutual coherence tie-break is lexicographic") {
  DenseMatrix phi = DenseMatrix::Identity(4, 4);
  // two pairs with identical coherence; (0,3) sorts before (1,2)
  phi.col(3) = (phi.col(0) + phi.col(3)).normalized();
  phi.col(2) = (phi.col(1) + phi.col(2)).normalized();
  DenseMatrix fixed = phi;
  fixed.col(2) = phi.col(2);
  const auto report = coh::mutual_coherence(fixed);
  CHECK(report.argmax_pair == std::pair<int, int>{0, 3});
}

TEST_CASE("welch bound values and domain") {
  CHECK(coh::welch_bound(100, 100) == doctest::Approx(0.0));
  CHECK(coh::welch_bound(1, 2) == doctest::Approx(1.0));
  CHECK(coh::welch_bound(100, 200) ==
        doctest::Approx(std::sqrt(100.0 / 19900.0)).epsilon(1e-12));
  CHECK_THROWS_AS(coh::welch_bound(5, 4), sompkit::domain_error);
}

TEST_CASE("erc constant: identity dictionary gives zero") {
  CHECK(coh::erc_constant(DenseMatrix::Identity(5, 5), {0, 2}) == doctest::Approx(0.0));
}

TEST_CASE("erc constant matches the explicit-inverse oracle") {
  const DenseMatrix phi = testutil::random_unit_columns(50, 100, 7);
  const std::vector<int> support = testutil::random_support(100, 4, 8);

  // brute force: solve the 4x4 normal equations per complement column
  const oracle::Mat phi_o = testutil::to_oracle(phi);
  oracle::Mat sub = oracle::zeros(50, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 50; ++i) {
      sub[i][k] = phi_o[i][static_cast<std::size_t>(support[k])];
    }
  }
  const oracle::Mat gram_inv = oracle::invert(oracle::gram(sub));
  const oracle::Mat sub_t = oracle::transpose(sub);
  double expected = 0.0;
  for (int j = 0; j < 100; ++j) {
    if (std::find(support.begin(), support.end(), j) != support.end()) continue;
    oracle::Mat col = oracle::zeros(50, 1);
    for (std::size_t i = 0; i < 50; ++i) col[i][0] = phi_o[i][static_cast<std::size_t>(j)];
    const oracle::Mat x = oracle::matmul(gram_inv, oracle::matmul(sub_t, col));
    double l1 = 0.0;
    for (const auto& row : x) l1 += std::abs(row[0]);
    expected = std::max(expected, l1);
  }

  CHECK(coh::erc_constant(phi, support) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("erc constant rejects a rank-deficient support block") {
  DenseMatrix phi = DenseMatrix::Identity(4, 4);
  phi.col(1) = phi.col(0);
  CHECK_THROWS_AS(coh::erc_constant(phi, {0, 1}), sompkit::singularity_error);
}

TEST_CASE("erc upper bound formula") {
  CHECK(coh::erc_upper_bound(0.0, 7) == doctest::Approx(0.0));
  CHECK(coh::erc_upper_bound(0.5, 1) == doctest::Approx(0.5));
  CHECK(coh::erc_upper_bound(0.0782, 4) ==
        doctest::Approx(0.3128 / 0.7654).epsilon(1e-10));
  CHECK_THROWS_AS(coh::erc_upper_bound(0.5, 3), sompkit::domain_error);
}

TEST_CASE("gram minimum-eigenvalue lower bound") {
  CHECK(coh::gram_min_eig_lower_bound(0.9, 1) == doctest::Approx(1.0));
  CHECK(coh::gram_min_eig_lower_bound(0.0, 9) == doctest::Approx(1.0));
  CHECK(coh::gram_min_eig_lower_bound(0.0782, 4) == doctest::Approx(0.7654).epsilon(1e-12));
}

TEST_CASE("welch bound never exceeds the measured coherence") {
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    const int m = 4 + static_cast<int>(seed % 13);
    const int n = m + 1 + static_cast<int>(seed % 17);
    const DenseMatrix phi = testutil::random_unit_columns(m, n, 1000 + seed);
    const auto report = coh::mutual_coherence(phi);
    CAPTURE(seed);
    CHECK(report.mu >= report.welch_lower_bound - 1e-12);
  }
}

TEST_CASE("erc constant obeys its coherence upper bound when feasible") {
  int checked = 0;
  for (std::uint32_t seed = 0; checked < 100; ++seed) {
    const int m = 24 + static_cast<int>(seed % 17);
    const int n = m + 10 + static_cast<int>(seed % 23);
    const int sparsity = 2 + static_cast<int>(seed % 2);
    const DenseMatrix phi = testutil::random_unit_columns(m, n, 2000 + seed);
    const double mu = coh::mutual_coherence(phi).mu;
    if ((sparsity - 1) * mu >= 1.0) continue;
    const auto support = testutil::random_support(n, sparsity, 3000 + seed);
    CAPTURE(seed);
    CHECK(coh::erc_constant(phi, support) <=
          coh::erc_upper_bound(mu, sparsity) + 1e-9);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("gershgorin bound holds for the support gram") {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const int m = 20 + static_cast<int>(seed % 11);
    const int n = m + 8 + static_cast<int>(seed % 19);
    const int sparsity = 2 + static_cast<int>(seed % 4);
    const DenseMatrix phi = testutil::random_unit_columns(m, n, 4000 + seed);
    const double mu = coh::mutual_coherence(phi).mu;
    const auto support = testutil::random_support(n, sparsity, 5000 + seed);
    const DenseMatrix sub = sompkit::gather_columns(phi, support);
    CAPTURE(seed);
    CHECK(sompkit::numerics::min_eig_gram(sub) >=
          coh::gram_min_eig_lower_bound(mu, sparsity) - 1e-9);
  }
}

TEST_CASE("support gram eigenvalue never exceeds the projected-complement one") {
  // the ordering that justifies the threshold-stopping proof
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const int m = 20 + static_cast<int>(seed % 13);
    const int n = m + 10 + static_cast<int>(seed % 11);
    const int sparsity = 3 + static_cast<int>(seed % 3);
    const int selected_count = 1 + static_cast<int>(seed % (sparsity - 1));
    const DenseMatrix phi = testutil::random_unit_columns(m, n, 6000 + seed);
    const auto support = testutil::random_support(n, sparsity, 7000 + seed);
    const std::vector<int> selected(support.begin(), support.begin() + selected_count);
    std::vector<int> remaining(support.begin() + selected_count, support.end());

    const DenseMatrix sub = sompkit::gather_columns(phi, support);
    const DenseMatrix projected = sompkit::numerics::least_squares_residual(
        sompkit::gather_columns(phi, selected), sompkit::gather_columns(phi, remaining));
    CAPTURE(seed);
    CHECK(sompkit::numerics::min_eig_gram(sub) <=
          sompkit::numerics::min_eig_gram(projected) + 1e-9);
  }
}

TEST_CASE("mutual coherence is invariant to column permutation and sign flips") {
  const DenseMatrix phi = testutil::random_unit_columns(12, 20, 99);
  const double mu = coh::mutual_coherence(phi).mu;
  DenseMatrix shuffled(12, 20);
  std::vector<int> perm(20);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int j = 0; j < 20; ++j) {
    const double sign = (j % 3 == 0) ? -1.0 : 1.0;
    shuffled.col(j) = sign * phi.col(perm[static_cast<std::size_t>(j)]);
  }
  CHECK(coh::mutual_coherence(shuffled).mu == doctest::Approx(mu).epsilon(1e-12));
}

TEST_CASE("renormalize helper produces unit columns and rejects zero columns") {
  DenseMatrix a(2, 2);
  a << 3, 0, 4, 0;
  CHECK_THROWS_AS(coh::renormalize_columns(a), sompkit::normalization_error);
  a(1, 1) = 2.0;
  const DenseMatrix unit = coh::renormalize_columns(a);
  CHECK(unit.col(0).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit.col(1).norm() == doctest::Approx(1.0).epsilon(1e-15));
}
