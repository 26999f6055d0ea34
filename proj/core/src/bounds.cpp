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

#include "thetarho/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetarho/exponents.hpp"

namespace thetarho {

CodeParams::CodeParams(std::uint64_t codewords, std::uint64_t block_length)
    : m_(codewords), n_(block_length) {
  if (codewords < 2 || block_length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need M >= 2 and n >= 1");
  }
  rate_ = std::log(static_cast<double>(m_)) / static_cast<double>(n_);
}

namespace {

void check_bound_args(double theta_nats, double rho) {
  if (!(rho >= 1.0)) throw Error(ErrorCode::kOutOfRange, "rho must be >= 1");
  if (!(theta_nats >= 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "theta must be nonnegative");
  }
}

}  // namespace

double theorem1_bound(const CodeParams& params, double theta_nats,
                      double rho) {
  check_bound_args(theta_nats, rho);
  const double m = static_cast<double>(params.codewords());
  const double excess =
      std::log(m) - static_cast<double>(params.block_length()) * theta_nats;
  if (excess <= 0.0) return 0.0;
  // log(M e^{-n theta} - 1) = log(expm1(excess))
  const double log_base = excess > 30.0
                              ? excess + std::log1p(-std::exp(-excess))
                              : std::log(std::expm1(excess));
  const double log_value = rho * log_base - (rho - 1.0) * std::log(m - 1.0);
  return std::exp(log_value);
}

double gamma_bound(const CodeParams& params, double theta_nats, double rho) {
  check_bound_args(theta_nats, rho);
  const double gap = params.rate_nats() - theta_nats;
  if (gap <= 0.0) return 0.0;
  const double n = static_cast<double>(params.block_length());
  // (e^{-n theta} - e^{-n R})^rho = e^{-n rho theta} (1 - e^{-n (R - theta)})^rho
  const double log_value =
      rho * (-n * theta_nats + std::log1p(-std::exp(-n * gap)));
  return std::min(std::exp(log_value), 1.0);
}

ExtendedReal reliability_upper(double rate_nats, const ThetaCurve& curve,
                               bool pairwise_reversible) {
  const double c = pairwise_reversible ? 1.0 : 2.0;
  bool found = false;
  double best = 0.0;
  for (const ThetaSample& s : curve.samples) {
    if (!s.ok || !(s.theta_nats < rate_nats)) continue;
    const double e = c * s.rho * s.theta_nats;
    if (!found || e < best) best = e;
    found = true;
  }
  return found ? ExtendedReal(best) : ExtendedReal::infinity();
}

BoundCurve build_er_curve(const BhattacharyyaMatrix& b,
                          const std::vector<double>& rho_grid,
                          bool pairwise_reversible, const ThetaOptions& opts) {
  const ThetaCurve thetas = theta_curve(b, rho_grid, opts);
  const double c = pairwise_reversible ? 1.0 : 2.0;
  BoundCurve out;
  for (const ThetaSample& s : thetas.samples) {
    BoundRecord r;
    r.rho = s.rho;
    r.ok = s.ok;
    r.ex_over_rho = expurgated_coeff(b, s.rho).value_nats / s.rho;
    if (s.ok) {
      r.theta_nats = s.theta_nats;
      r.rate_nats = s.theta_nats;
      r.e_upper_nats = c * s.rho * s.theta_nats;
    } else {
      r.theta_nats = r.rate_nats = r.e_upper_nats =
          std::numeric_limits<double>::quiet_NaN();
      out.complete = false;
    }
    out.records.push_back(r);
  }
  return out;
}

}  // namespace thetarho
