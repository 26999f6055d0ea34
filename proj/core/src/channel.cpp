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

#include "thetarho/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thetarho {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNonStochasticRow: return "NonStochasticRow";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSameSymbol: return "SameSymbol";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kSolverBudgetExceeded: return "SolverBudgetExceeded";
    case ErrorCode::kOrderOverflow: return "OrderOverflow";
    case ErrorCode::kTooManyCodewords: return "TooManyCodewords";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Channel::Channel(Rows rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "channel matrix is empty");
  }
  const std::size_t cols = rows_.front().size();
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    const auto& row = rows_[x];
    if (row.size() != cols) {
      throw Error(ErrorCode::kEmptyMatrix,
                  "channel matrix is not rectangular at row " +
                      std::to_string(x));
    }
    double sum = 0.0;
    for (double w : row) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "row " + std::to_string(x) + " has a negative entry");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "row " << x << " sums to " << sum;
      throw Error(ErrorCode::kNonStochasticRow, msg.str());
    }
  }
}

Channel channel_from_matrix(Channel::Rows rows, std::string name) {
  return Channel(std::move(rows), std::move(name));
}

Channel bsc(double eps) {
  if (!(eps >= 0.0 && eps <= 0.5)) {
    throw Error(ErrorCode::kOutOfRange, "BSC crossover must lie in [0, 1/2]");
  }
  std::ostringstream name;
  name << "bsc(" << eps << ")";
  return Channel({{1.0 - eps, eps}, {eps, 1.0 - eps}}, name.str());
}

Channel noisy_typewriter(std::size_t inputs, double q) {
  if (inputs < 2 || !(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "typewriter needs K >= 2 and q in [0, 1]");
  }
  Channel::Rows rows(inputs, std::vector<double>(inputs, 0.0));
  for (std::size_t x = 0; x < inputs; ++x) {
    rows[x][x] += 1.0 - q;
    rows[x][(x + 1) % inputs] += q;
  }
  std::ostringstream name;
  name << "typewriter(" << inputs << "," << q << ")";
  return Channel(std::move(rows), name.str());
}

BhattacharyyaMatrix bhattacharyya_matrix(const Channel& ch) {
  const std::size_t k = ch.inputs();
  BhattacharyyaMatrix out{SymMatrix(k), std::vector<bool>(k * k, false)};
  for (std::size_t x = 0; x < k; ++x) {
    out.coeff.set(x, x, 1.0);
    for (std::size_t xp = x + 1; xp < k; ++xp) {
      bool overlap = false;
      double sum = 0.0;
      for (std::size_t y = 0; y < ch.outputs(); ++y) {
        if (ch(x, y) != 0.0 && ch(xp, y) != 0.0) {
          overlap = true;
          sum += std::sqrt(ch(x, y) * ch(xp, y));
        }
      }
      out.coeff.set(x, xp, overlap ? std::min(sum, 1.0) : 0.0);
      out.support_disjoint[x * k + xp] = !overlap;
      out.support_disjoint[xp * k + x] = !overlap;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> confusability_edges(
    const BhattacharyyaMatrix& b) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < b.order(); ++x) {
    for (std::size_t xp = x + 1; xp < b.order(); ++xp) {
      if (!b.disjoint(x, xp)) edges.emplace_back(x, xp);
    }
  }
  return edges;
}

namespace {

// sum_y W(y|x)^{1-s} W(y|x')^s restricted to the common support.
double chernoff_sum(const Channel& ch, std::size_t x, std::size_t xp,
                    double s) {
  double sum = 0.0;
  for (std::size_t y = 0; y < ch.outputs(); ++y) {
    const double a = ch(x, y);
    const double b = ch(xp, y);
    if (a != 0.0 && b != 0.0) sum += std::pow(a, 1.0 - s) * std::pow(b, s);
  }
  return sum;
}

constexpr double kChernoffIntervalTol = 1e-10;

// Convex in s; ternary search down to the interval tolerance.
ChernoffResult minimize_chernoff(const Channel& ch, std::size_t x,
                                 std::size_t xp) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kChernoffIntervalTol) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (chernoff_sum(ch, x, xp, m1) <= chernoff_sum(ch, x, xp, m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double s = 0.5 * (lo + hi);
  return {ExtendedReal(-std::log(chernoff_sum(ch, x, xp, s))), s};
}

bool supports_disjoint(const Channel& ch, std::size_t x, std::size_t xp) {
  for (std::size_t y = 0; y < ch.outputs(); ++y) {
    if (ch(x, y) != 0.0 && ch(xp, y) != 0.0) return false;
  }
  return true;
}

}  // namespace

ChernoffResult chernoff_exponent(const Channel& ch, std::size_t x,
                                 std::size_t xp) {
  if (x >= ch.inputs() || xp >= ch.inputs()) {
    throw Error(ErrorCode::kOutOfRange, "input symbol out of range");
  }
  if (x == xp) {
    throw Error(ErrorCode::kSameSymbol, "Chernoff exponent needs x != x'");
  }
  if (supports_disjoint(ch, x, xp)) {
    return {ExtendedReal::infinity(), 0.5};
  }
  return minimize_chernoff(ch, x, xp);
}

bool is_pairwise_reversible(const Channel& ch, double tol) {
  for (std::size_t x = 0; x < ch.inputs(); ++x) {
    for (std::size_t xp = x + 1; xp < ch.inputs(); ++xp) {
      if (supports_disjoint(ch, x, xp)) continue;
      const ChernoffResult r = minimize_chernoff(ch, x, xp);
      const double at_min = chernoff_sum(ch, x, xp, r.s_star);
      const double at_half = chernoff_sum(ch, x, xp, 0.5);
      if (at_half - at_min > tol) return false;
    }
  }
  return true;
}

}  // namespace thetarho
