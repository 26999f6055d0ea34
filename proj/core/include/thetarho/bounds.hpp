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

#ifndef THETARHO_BOUNDS_HPP_
#define THETARHO_BOUNDS_HPP_

#include <cstdint>
#include <vector>

#include "thetarho/channel.hpp"
#include "thetarho/error.hpp"
#include "thetarho/theta.hpp"

namespace thetarho {

/// M codewords of block length n; rate in nats per symbol.
class CodeParams {
 public:
  CodeParams(std::uint64_t codewords, std::uint64_t block_length);

  std::uint64_t codewords() const { return m_; }
  std::uint64_t block_length() const { return n_; }
  double rate_nats() const { return rate_; }

 private:
  std::uint64_t m_;
  std::uint64_t n_;
  double rate_;
};

/// Lower bound on max_m sum_{m' != m} <Psi_m, Psi_m'> for any code:
///   (M e^{-n theta} - 1)^rho / (M - 1)^{rho - 1},
/// zero when M e^{-n theta} <= 1. Evaluated in the log domain.
double theorem1_bound(const CodeParams& params, double theta_nats, double rho);

/// Lower bound (e^{-n theta} - e^{-n R})^rho on the largest pairwise
/// Bhattacharyya coefficient; zero when R <= theta.
double gamma_bound(const CodeParams& params, double theta_nats, double rho);

/// min over samples with theta < R of c * rho * theta, c = 1 for pairwise
/// reversible channels and 2 otherwise. Infinite when no sample qualifies.
ExtendedReal reliability_upper(double rate_nats, const ThetaCurve& curve,
                               bool pairwise_reversible);

struct BoundRecord {
  double rho = 1.0;
  double theta_nats = 0.0;
  double rate_nats = 0.0;
  double e_upper_nats = 0.0;
  double ex_over_rho = 0.0;
  bool ok = true;
};

struct BoundCurve {
  std::vector<BoundRecord> records;
  bool complete = true;
};

BoundCurve build_er_curve(const BhattacharyyaMatrix& b,
                          const std::vector<double>& rho_grid,
                          bool pairwise_reversible,
                          const ThetaOptions& opts = {});

}  // namespace thetarho

#endif  // THETARHO_BOUNDS_HPP_
