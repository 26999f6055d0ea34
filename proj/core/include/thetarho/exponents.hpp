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

#ifndef THETARHO_EXPONENTS_HPP_
#define THETARHO_EXPONENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thetarho/channel.hpp"
#include "thetarho/sdp_core.hpp"

namespace thetarho {

enum class StartKind { kUniform, kVertex, kRandom };

struct SimplexQpOptions {
  std::size_t random_starts = 8;
  std::uint64_t seed = 0x5eed'2013ULL;
  std::size_t max_iter = 10000;
  double grad_tol = 1e-10;
};

struct SimplexQpResult {
  double value = 0.0;
  std::vector<double> distribution;
  std::size_t starts_used = 0;
  StartKind best_start = StartKind::kUniform;
  /// True when A is PSD, i.e. the problem is convex and the value is global.
  bool certified = false;
};

/// min_{P in simplex} P^T A P by multi-start projected gradient.
SimplexQpResult min_quadratic_simplex(const SymMatrix& a,
                                      const SimplexQpOptions& opts = {});

struct ExponentResult {
  double value_nats = 0.0;
  std::vector<double> distribution;
  std::size_t starts_used = 0;
  StartKind best_start_kind = StartKind::kUniform;
  bool certified = false;
};

/// R_1 = max_P -log sum P(x)P(x') B(x,x').
ExponentResult cutoff_rate(const BhattacharyyaMatrix& b,
                           const SimplexQpOptions& opts = {});

/// E_x(rho) = max_P -rho log sum P(x)P(x') B(x,x')^{1/rho}.
ExponentResult expurgated_coeff(const BhattacharyyaMatrix& b, double rho,
                                const SimplexQpOptions& opts = {});

inline constexpr std::size_t kMaxKronOrder = 64;

/// Bhattacharyya matrix of the n-fold extension (n in {1, 2}). Index of the
/// pair (x, y) is x * K + y.
BhattacharyyaMatrix kron_power_bhatt(const BhattacharyyaMatrix& b,
                                     std::size_t n);

const char* to_string(StartKind kind);

}  // namespace thetarho

#endif  // THETARHO_EXPONENTS_HPP_
