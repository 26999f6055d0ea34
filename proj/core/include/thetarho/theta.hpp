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

#ifndef THETARHO_THETA_HPP_
#define THETARHO_THETA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thetarho/channel.hpp"
#include "thetarho/error.hpp"
#include "thetarho/sdp_core.hpp"

namespace thetarho {

struct ThetaOptions {
  double feasibility_tol = kDefaultFeasibilityTolerance;
  std::size_t max_iter = kDefaultFeasibilityIterations;
  /// Absolute tolerance on the handle level v.
  double bisection_tol = 1e-6;
  /// Sum of Dykstra iterations allowed across one solve.
  std::size_t max_total_iter = 5'000'000;
  /// Worker threads for theta_curve; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// An optimal (to solver tolerance) orthonormal representation of degree rho
/// together with its handle.
///
/// `gram` has order K + 1: indices 0..K-1 are the tilted state vectors and
/// index K is the handle. Columns of `vectors` are the tilted vectors and
/// `handle` is the last factored column.
struct DegreeRhoRepresentation {
  ExtendedReal rho;  // infinite in Lovasz mode
  SymMatrix gram;
  Matrix vectors;
  std::vector<double> handle;
  double theta_nats = 0.0;
  double handle_level = 1.0;
  std::size_t iterations = 0;
  std::size_t feasibility_calls = 0;

  std::size_t inputs() const { return gram.order() - 1; }
  std::size_t handle_index() const { return gram.order() - 1; }
};

DegreeRhoRepresentation theta_rho(const BhattacharyyaMatrix& b, double rho,
                                  const ThetaOptions& opts = {});

/// rho -> infinity: only the exact orthogonality of non-confusable pairs
/// remains, which yields the log of the Lovasz number.
DegreeRhoRepresentation theta_lovasz(const BhattacharyyaMatrix& b,
                                     const ThetaOptions& opts = {});

/// Largest rho <= rho_hi for which B^{∘1/rho} stays PSD (min eigenvalue >=
/// -tol). Infinite when PSD on the whole range.
ExtendedReal rho_bar(const BhattacharyyaMatrix& b, double rho_hi = 100.0,
                     double tol = 1e-10);

/// Elementwise power B^{∘(1/rho)} with 0^{1/rho} = 0.
SymMatrix elementwise_root(const SymMatrix& b, double rho);

struct ThetaSample {
  double rho = 1.0;
  double theta_nats = 0.0;
  double handle_level = 1.0;
  std::size_t iterations = 0;
  std::size_t feasibility_calls = 0;
  bool ok = true;
  std::string error;  // empty unless !ok
};

struct ThetaCurve {
  std::vector<ThetaSample> samples;  // sorted by rho
  bool complete() const;
};

/// theta_rho at every grid point. Grid points are solved concurrently; a
/// failing point is flagged in its sample and the rest still run.
ThetaCurve theta_curve(const BhattacharyyaMatrix& b,
                       const std::vector<double>& rho_grid,
                       const ThetaOptions& opts = {});

/// Diagnostic: all pairwise inner products among tilted vectors >= -tol.
bool representation_nonnegativity(const DegreeRhoRepresentation& rep,
                                  double tol = 1e-6);

/// The box describing Gamma(rho) at handle level v (exposed for tests).
EntryBox representation_box(const BhattacharyyaMatrix& b,
                            std::optional<double> rho, double handle_level);

}  // namespace thetarho

#endif  // THETARHO_THETA_HPP_
