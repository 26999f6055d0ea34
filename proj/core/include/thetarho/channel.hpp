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

#ifndef THETARHO_CHANNEL_HPP_
#define THETARHO_CHANNEL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "thetarho/error.hpp"
#include "thetarho/sdp_core.hpp"

namespace thetarho {

/// Discrete memoryless channel W(y|x), K inputs by J outputs, row stochastic.
class Channel {
 public:
  using Rows = std::vector<std::vector<double>>;

  /// Validates and stores `rows`. Throws Error on empty, ragged, negative or
  /// non-stochastic input.
  Channel(Rows rows, std::string name);

  std::size_t inputs() const { return rows_.size(); }
  std::size_t outputs() const { return rows_.front().size(); }
  double operator()(std::size_t x, std::size_t y) const { return rows_[x][y]; }
  const Rows& rows() const { return rows_; }
  const std::string& name() const { return name_; }

 private:
  Rows rows_;
  std::string name_;
};

/// Row-sum tolerance used by channel validation.
inline constexpr double kRowSumTolerance = 1e-9;

/// Gram matrix of the state vectors psi_x(y) = sqrt(W(y|x)).
struct BhattacharyyaMatrix {
  SymMatrix coeff;
  /// support_disjoint[x * K + x'] is true when rows x and x' never share an
  /// output with nonzero probability. Decided from exact zeros of W.
  std::vector<bool> support_disjoint;

  std::size_t order() const { return coeff.order(); }
  double operator()(std::size_t x, std::size_t xp) const {
    return coeff(x, xp);
  }
  bool disjoint(std::size_t x, std::size_t xp) const {
    return support_disjoint[x * order() + xp];
  }
};

struct Codeword {
  std::vector<std::size_t> symbols;
};

Channel channel_from_matrix(Channel::Rows rows, std::string name);
Channel bsc(double eps);
Channel noisy_typewriter(std::size_t inputs, double q);

BhattacharyyaMatrix bhattacharyya_matrix(const Channel& ch);

/// Unordered confusable pairs (x < x'), in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> confusability_edges(
    const BhattacharyyaMatrix& b);

struct ChernoffResult {
  ExtendedReal exponent;  // nats; +inf when supports are disjoint
  double s_star = 0.5;
};

/// Minimizes sum_y W(y|x)^{1-s} W(y|x')^s over s in [0, 1] by ternary search.
ChernoffResult chernoff_exponent(const Channel& ch, std::size_t x,
                                 std::size_t xp);

/// True iff every confusable pair attains its Chernoff minimum at s = 1/2
/// within `tol` on the summed value.
bool is_pairwise_reversible(const Channel& ch, double tol = 1e-8);

}  // namespace thetarho

#endif  // THETARHO_CHANNEL_HPP_
