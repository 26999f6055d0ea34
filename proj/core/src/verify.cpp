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

#include "thetarho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "thetarho/bounds.hpp"
#include "thetarho/error.hpp"
#include "thetarho/exponents.hpp"

namespace thetarho {

CodeRng::CodeRng(std::uint64_t seed) : engine_(seed) {}

std::size_t CodeRng::below(std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % b);
}

CodeSample code_from_words(const BhattacharyyaMatrix& b,
                           std::vector<Codeword> words) {
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "code has no codewords");
  }
  const std::size_t n = words.front().symbols.size();
  for (const Codeword& w : words) {
    if (w.symbols.size() != n || n == 0) {
      throw Error(ErrorCode::kInvalidArgument, "codeword lengths differ");
    }
    for (std::size_t s : w.symbols) {
      if (s >= b.order()) {
        throw Error(ErrorCode::kOutOfRange, "codeword symbol out of range");
      }
    }
  }
  CodeSample sample;
  sample.gram_bhatt = SymMatrix(words.size());
  for (std::size_t m = 0; m < words.size(); ++m) {
    sample.gram_bhatt.set(m, m, 1.0);
    for (std::size_t mp = m + 1; mp < words.size(); ++mp) {
      double prod = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        prod *= b(words[m].symbols[i], words[mp].symbols[i]);
      }
      sample.gram_bhatt.set(m, mp, prod);
    }
  }
  sample.codewords = std::move(words);
  return sample;
}

CodeSample random_code(const BhattacharyyaMatrix& b, std::size_t n,
                       std::size_t m, std::uint64_t seed) {
  const std::size_t k = b.order();
  if (n == 0 || m < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and M >= 2");
  }
  // K^n >= M, evaluated without overflow.
  std::size_t capacity = 1;
  for (std::size_t i = 0; i < n && capacity < m; ++i) capacity *= k;
  if (capacity < m) {
    throw Error(ErrorCode::kTooManyCodewords, "M exceeds K^n");
  }

  CodeRng rng(seed);
  std::set<std::vector<std::size_t>> seen;
  std::vector<Codeword> words;
  words.reserve(m);
  while (words.size() < m) {
    std::vector<std::size_t> symbols(n);
    for (std::size_t& s : symbols) s = rng.below(k);
    if (seen.insert(symbols).second) words.push_back({std::move(symbols)});
  }
  CodeSample sample = code_from_words(b, std::move(words));
  sample.seed = seed;
  return sample;
}

double check_theorem1(const CodeSample& sample, double theta_nats,
                      double rho) {
  const std::size_t m = sample.size();
  double lhs = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) row += sample.gram_bhatt(i, j);
    }
    lhs = std::max(lhs, row);
  }
  const CodeParams params(m, sample.block_length());
  return lhs - theorem1_bound(params, theta_nats, rho);
}

ProofChainReport check_proof_chain(const DegreeRhoRepresentation& rep,
                                   const CodeSample& sample, double tol) {
  return check_proof_chain(rep, sample, rep.theta_nats, tol);
}

ProofChainReport check_proof_chain(const DegreeRhoRepresentation& rep,
                                   const CodeSample& sample, double theta_nats,
                                   double tol) {
  const std::size_t k = rep.inputs();
  const std::size_t h = rep.handle_index();
  const std::size_t m = sample.size();
  const double n = static_cast<double>(sample.block_length());
  ProofChainReport r;

  // (a) |<psi~_x, f>|^2 >= e^{-theta} for every input symbol.
  double min_sq = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < k; ++x) {
    min_sq = std::min(min_sq, rep.gram(x, h) * rep.gram(x, h));
  }
  r.handle_slack = min_sq - std::exp(-theta_nats);
  r.per_symbol_handle_ok = r.handle_slack >= -tol;

  // Phi^T Phi: tilted codeword inner products over M.
  SymMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      double prod = 1.0;
      const auto& xi = sample.codewords[i].symbols;
      const auto& xj = sample.codewords[j].symbols;
      for (std::size_t pos = 0; pos < xi.size(); ++pos) {
        prod *= rep.gram(xi[pos], xj[pos]);
      }
      a.set(i, j, prod / static_cast<double>(m));
    }
  }

  // (b) lambda_max(Phi^T Phi) >= e^{-n theta}.
  r.lambda_max = eigh(a).values.back();
  r.lambda_slack = r.lambda_max - std::exp(-n * theta_nats);
  r.lambda_max_ok = r.lambda_slack >= -tol;

  // (c) lambda_max(A) <= max_i sum_j |A_ij|.
  double row_max = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) sum += std::abs(a(i, j));
    row_max = std::max(row_max, sum);
  }
  r.rowsum_slack = row_max - r.lambda_max;
  r.rowsum_ok = r.rowsum_slack >= -tol;
  return r;
}

TensorPowerCheck check_tensor_power(const BhattacharyyaMatrix& b, double rho,
                                    const ThetaOptions& opts) {
  const BhattacharyyaMatrix b2 = kron_power_bhatt(b, 2);
  const DegreeRhoRepresentation rep = theta_rho(b, rho, opts);
  const ExponentResult ex2 = expurgated_coeff(b2, rho);

  TensorPowerCheck out;
  out.lhs = rep.theta_nats;
  out.rhs = ex2.value_nats / (2.0 * rho);
  out.holds = out.lhs >= out.rhs - kTensorPowerTolerance;
  out.applicable = representation_nonnegativity(rep);
  out.rhs_certified = ex2.certified;
  return out;
}

}  // namespace thetarho
