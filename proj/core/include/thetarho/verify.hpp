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

#ifndef THETARHO_VERIFY_HPP_
#define THETARHO_VERIFY_HPP_

// Independent checks of the code-level inequalities: Monte-Carlo codes,
// the proof chain on a solved representation, and the n = 2 tensor-power
// inequality.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thetarho/channel.hpp"
#include "thetarho/sdp_core.hpp"
#include "thetarho/theta.hpp"

namespace thetarho {

/// Deterministic source of codewords. mt19937_64 with rejection sampling for
/// bounded draws, so samples are identical across standard libraries.
class CodeRng {
 public:
  explicit CodeRng(std::uint64_t seed);
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

struct CodeSample {
  std::vector<Codeword> codewords;
  std::uint64_t seed = 0;
  /// M x M matrix of <Psi_m, Psi_m'> = prod_i B(x_{m,i}, x_{m',i}).
  SymMatrix gram_bhatt;

  std::size_t size() const { return codewords.size(); }
  std::size_t block_length() const {
    return codewords.empty() ? 0 : codewords.front().symbols.size();
  }
};

/// M distinct codewords of length n drawn uniformly. Throws
/// Error(kTooManyCodewords) when M > K^n.
CodeSample random_code(const BhattacharyyaMatrix& b, std::size_t n,
                       std::size_t m, std::uint64_t seed);

/// Builds the sample for a given list of codewords.
CodeSample code_from_words(const BhattacharyyaMatrix& b,
                           std::vector<Codeword> words);

/// max_m sum_{m' != m} gram_bhatt(m, m') minus theorem1_bound. Nonnegative
/// whenever theta_nats is a valid value at this rho.
double check_theorem1(const CodeSample& sample, double theta_nats, double rho);

struct ProofChainReport {
  bool per_symbol_handle_ok = false;
  bool lambda_max_ok = false;
  bool rowsum_ok = false;
  double handle_slack = 0.0;    // min_x |<psi~_x, f>|^2 - e^{-theta}
  double lambda_slack = 0.0;    // lambda_max(Phi^T Phi) - e^{-n theta}
  double rowsum_slack = 0.0;    // max row abs-sum - lambda_max
  double lambda_max = 0.0;
  bool all_ok() const {
    return per_symbol_handle_ok && lambda_max_ok && rowsum_ok;
  }
};

inline constexpr double kProofChainTolerance = 1e-6;

/// Checks the three links of the pairwise-error bound argument for `sample`
/// against the representation. `theta_nats` defaults to the representation's own value;
/// pass a different one to probe the harness.
ProofChainReport check_proof_chain(const DegreeRhoRepresentation& rep,
                                   const CodeSample& sample,
                                   double tol = kProofChainTolerance);
ProofChainReport check_proof_chain(const DegreeRhoRepresentation& rep,
                                   const CodeSample& sample, double theta_nats,
                                   double tol);

struct TensorPowerCheck {
  double lhs = 0.0;  // theta(rho)
  double rhs = 0.0;  // E_x^{(2)}(rho) / (2 rho)
  bool holds = false;
  /// The inequality is only claimed when the representation has
  /// nonnegative tilted inner products.
  bool applicable = false;
  bool rhs_certified = false;
};

inline constexpr double kTensorPowerTolerance = 1e-3;

TensorPowerCheck check_tensor_power(const BhattacharyyaMatrix& b, double rho,
                                    const ThetaOptions& opts = {});

}  // namespace thetarho

#endif  // THETARHO_VERIFY_HPP_
