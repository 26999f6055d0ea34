// Copyright 2026 The thetarho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "thetarho/exponents.hpp"
#include "thetarho/theta.hpp"

using namespace thetarho;
using doctest::Approx;

namespace {

SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) s.set(i, j, rows[i][j]);
  return s;
}

double sum(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

}  // namespace

TEST_CASE("min_quadratic_simplex named cases") {
  const auto id = min_quadratic_simplex(SymMatrix::identity(2));
  CHECK(id.value == Approx(0.5));
  CHECK(id.distribution[0] == Approx(0.5));
  CHECK(id.certified);

  const auto b = min_quadratic_simplex(from_rows({{1, 0.6}, {0.6, 1}}));
  CHECK(b.value == Approx(0.8).epsilon(1e-12));
  CHECK(b.value ==
        Approx(oracle::simplex_grid_min({{1, 0.6}, {0.6, 1}})).epsilon(1e-9));
  CHECK(b.distribution[1] == Approx(0.5));

  const auto ones = min_quadratic_simplex(SymMatrix(3, 1.0));
  CHECK(ones.value == Approx(1.0));
  CHECK(sum(ones.distribution) == Approx(1.0).epsilon(1e-12));
  CHECK(ones.starts_used == 1 + 3 + 8);
}

TEST_CASE("min_quadratic_simplex agrees with grid search for K <= 3") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + trial % 2;
    std::vector<std::vector<double>> a(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      a[i][i] = 1.0;
      for (std::size_t j = i + 1; j < k; ++j) a[i][j] = a[j][i] = u(rng);
    }
    const auto r = min_quadratic_simplex(from_rows(a));
    const double grid = oracle::simplex_grid_min(a);
    // The grid value is an upper bound; the optimum lies within 1e-5 of it.
    CHECK(r.value <= grid + 1e-12);
    CHECK(r.value >= grid - 1e-5);
    CHECK(sum(r.distribution) == Approx(1.0).epsilon(1e-10));
    for (double p : r.distribution) CHECK(p >= 0.0);
  }
}

TEST_CASE("cutoff_rate") {
  const auto r = cutoff_rate(bhattacharyya_matrix(bsc(0.1)));
  CHECK(r.value_nats == Approx(-std::log(0.8)).epsilon(1e-10));
  CHECK(r.value_nats == Approx(0.22314355));
  CHECK(r.certified);

  CHECK(cutoff_rate(bhattacharyya_matrix(bsc(0.0))).value_nats ==
        Approx(std::log(2.0)));
  const auto same = bhattacharyya_matrix(
      channel_from_matrix({{0.5, 0.5}, {0.5, 0.5}}, "same"));
  CHECK(std::abs(cutoff_rate(same).value_nats) <= 1e-15);
}

TEST_CASE("cutoff_rate is nonnegative and zero only for identical rows") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = oracle::random_channel(rng, 2 + rng() % 4, 2 + rng() % 4);
    const auto b = bhattacharyya_matrix(Channel(rows, "random"));
    const auto r = cutoff_rate(b);
    CHECK(r.value_nats >= -1e-14);
    bool all_ones = true;
    for (std::size_t i = 0; i < b.order(); ++i)
      for (std::size_t j = 0; j < b.order(); ++j)
        all_ones = all_ones && b(i, j) > 1.0 - 1e-12;
    if (!all_ones) CHECK(r.value_nats > 1e-12);
  }
}

TEST_CASE("expurgated_coeff") {
  const auto b = bhattacharyya_matrix(bsc(0.1));
  for (double rho : {1.0, 2.0, 5.0}) {
    const auto ex = expurgated_coeff(b, rho);
    CHECK(ex.value_nats / rho ==
          Approx(oracle::bsc_theta(0.1, rho)).epsilon(1e-9));
    CHECK(ex.certified);
  }
  CHECK(expurgated_coeff(b, 1.0).value_nats == cutoff_rate(b).value_nats);
  CHECK_THROWS_AS(expurgated_coeff(b, 0.9), Error);
}

TEST_CASE("pentagon E_x(rho)/rho approaches log of the independence number") {
  const auto b = bhattacharyya_matrix(noisy_typewriter(5, 0.5));
  const std::size_t alpha =
      oracle::max_independent_set(5, confusability_edges(b));
  CHECK(alpha == 2);
  const auto ex = expurgated_coeff(b, 100.0);
  CHECK(std::abs(ex.value_nats / 100.0 - std::log(double(alpha))) <= 2e-2);
  CHECK_FALSE(ex.certified);  // B^{1/100} is indefinite for the pentagon
}

TEST_CASE("E_x(rho)/rho is nonincreasing in rho") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const auto rows = oracle::random_channel(rng, 2 + rng() % 3, 3);
    const auto b = bhattacharyya_matrix(Channel(rows, "random"));
    double prev = 1e300;
    for (double rho : {1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
      const double v = expurgated_coeff(b, rho).value_nats / rho;
      CHECK(v <= prev + 1e-6);
      prev = v;
    }
  }
}

TEST_CASE("kron_power_bhatt") {
  const auto b = bhattacharyya_matrix(bsc(0.1));
  const auto same = kron_power_bhatt(b, 1);
  CHECK(same.order() == 2);
  CHECK(same(0, 1) == b(0, 1));

  const auto id2 = kron_power_bhatt(bhattacharyya_matrix(bsc(0.0)), 2);
  CHECK(id2.order() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(id2(i, j) == (i == j ? 1.0 : 0.0));
      CHECK(id2.disjoint(i, j) == (i != j));
    }

  const auto pent = kron_power_bhatt(
      bhattacharyya_matrix(noisy_typewriter(5, 0.5)), 2);
  CHECK(pent.order() == 25);
  for (std::size_t i = 0; i < 25; ++i)
    for (std::size_t j = 0; j < 25; ++j) {
      const double v = pent(i, j);
      CHECK((v == 0.0 || v == 0.25 || v == 0.5 || v == 1.0));
      CHECK(pent.disjoint(i, j) == (v == 0.0));
    }

  const auto big = bhattacharyya_matrix(noisy_typewriter(9, 0.5));
  bool overflow = false;
  try {
    kron_power_bhatt(big, 2);
  } catch (const Error& e) {
    overflow = e.code() == ErrorCode::kOrderOverflow;
  }
  CHECK(overflow);
  CHECK_THROWS_AS(kron_power_bhatt(b, 3), Error);
}
