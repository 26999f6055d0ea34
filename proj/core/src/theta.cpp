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

#include "thetarho/theta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace thetarho {

SymMatrix elementwise_root(const SymMatrix& b, double rho) {
  SymMatrix out(b.order());
  const double power = 1.0 / rho;
  for (std::size_t i = 0; i < b.order(); ++i) {
    for (std::size_t j = i; j < b.order(); ++j) {
      const double v = b(i, j);
      out.set(i, j, v == 0.0 ? 0.0 : std::pow(v, power));
    }
  }
  return out;
}

EntryBox representation_box(const BhattacharyyaMatrix& b,
                            std::optional<double> rho, double handle_level) {
  const std::size_t k = b.order();
  EntryBox box = EntryBox::unconstrained(k + 1);
  for (std::size_t x = 0; x <= k; ++x) box.fix(x, x, 1.0);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t xp = x + 1; xp < k; ++xp) {
      if (b.disjoint(x, xp)) {
        box.fix(x, xp, 0.0);
      } else if (rho) {
        const double cap = std::pow(b(x, xp), 1.0 / *rho);
        box.bound(x, xp, -cap, cap);
      } else {
        // Implied by PSD with unit diagonal.
        box.bound(x, xp, -1.0, 1.0);
      }
    }
    box.bound(x, k, handle_level, 1.0);
  }
  return box;
}

namespace {

// Orthonormal tilted vectors with the handle along their normalized sum. It
// lies in Gamma(rho) for every rho and has handle level 1/sqrt(K).
SymMatrix orthonormal_start(std::size_t k) {
  SymMatrix g = SymMatrix::identity(k + 1);
  const double level = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t x = 0; x < k; ++x) g.set(x, k, level);
  return g;
}

DegreeRhoRepresentation finish(SymMatrix gram, double level, double tol,
                               ExtendedReal rho) {
  DegreeRhoRepresentation rep;
  rep.rho = rho;
  rep.handle_level = level;
  rep.theta_nats = -2.0 * std::log(level);
  const std::size_t k = gram.order() - 1;
  const Matrix factor = gram_factor(gram, tol);
  rep.vectors = Matrix(factor.rows(), k);
  rep.handle.resize(factor.rows());
  for (std::size_t r = 0; r < factor.rows(); ++r) {
    for (std::size_t x = 0; x < k; ++x) rep.vectors(r, x) = factor(r, x);
    rep.handle[r] = factor(r, k);
  }
  rep.gram = std::move(gram);
  return rep;
}

// Turn a PSD matrix that nearly fits the box into one that fits it exactly:
// unit diagonal by congruence, then a convex step towards a strictly
// positive definite interior point until every entry cap holds. Returns the
// repaired matrix and its handle level.
std::optional<std::pair<SymMatrix, double>> repair(
    const BhattacharyyaMatrix& b, std::optional<double> rho, SymMatrix y) {
  const std::size_t k = b.order();
  const std::size_t n = k + 1;
  std::vector<double> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y(i, i) > 0.5)) return std::nullopt;
    scale[i] = 1.0 / std::sqrt(y(i, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) y.set(i, j, y(i, j) * scale[i] * scale[j]);
    y.set(i, i, 1.0);
  }

  // Interior point: orthonormal inputs, handle column at half the
  // orthonormal level; its smallest eigenvalue is 1/2.
  const double h0 = 0.5 / std::sqrt(static_cast<double>(k));
  constexpr double kInteriorEig = 0.5;

  double t = 0.0;
  std::vector<double> zeroed_row(n, 0.0);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t xp = x + 1; xp < k; ++xp) {
      const double g = std::abs(y(x, xp));
      if (b.disjoint(x, xp)) {
        zeroed_row[x] += g;
        zeroed_row[xp] += g;
        continue;
      }
      const double cap = rho ? std::pow(b(x, xp), 1.0 / *rho) : 1.0;
      if (g > cap) t = std::max(t, 1.0 - cap / g);
    }
  }
  // Zeroing the disjoint entries moves eigenvalues by at most the largest
  // removed row sum; the interior share must cover that.
  const double removed = *std::max_element(zeroed_row.begin(), zeroed_row.end());
  t = std::max(t, removed / (kInteriorEig + removed));
  if (!(t < 1.0)) return std::nullopt;

  SymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double interior = j == k ? h0 : 0.0;
      const bool zero = j < k && b.disjoint(i, j);
      g.set(i, j, zero ? 0.0 : (1.0 - t) * y(i, j) + t * interior);
    }
  }
  double level = 1.0;
  for (std::size_t x = 0; x < k; ++x) level = std::min(level, g(x, k));
  if (!(level > 0.0)) return std::nullopt;
  return std::pair{std::move(g), level};
}

DegreeRhoRepresentation solve(const BhattacharyyaMatrix& b,
                              std::optional<double> rho,
                              const ThetaOptions& opts) {
  const std::size_t k = b.order();
  const ExtendedReal rho_tag =
      rho ? ExtendedReal(*rho) : ExtendedReal::infinity();

  // v = 1 forces every vector onto the handle, i.e. the all-ones Gram matrix.
  const SymMatrix ones(k + 1, 1.0);
  if (representation_box(b, rho, 1.0).contains(ones)) {
    return finish(ones, 1.0, opts.feasibility_tol, rho_tag);
  }

  double lo = 1.0 / std::sqrt(static_cast<double>(k));
  double hi = 1.0;
  SymMatrix best = orthonormal_start(k);
  double best_level = lo;
  SymMatrix warm = best;
  std::size_t total_iter = 0;
  std::size_t calls = 0;

  while (hi - lo > opts.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    const FeasibilityReport report =
        dykstra_feasibility(representation_box(b, rho, mid), warm,
                            opts.feasibility_tol, opts.max_iter);
    total_iter += report.iterations;
    ++calls;
    // Near the optimum Dykstra stalls short of tol; the repaired iterate
    // still certifies a level within O(residual) of mid.
    if (auto fixed = repair(b, rho, psd_project(report.point))) {
      if (fixed->second > best_level) {
        best_level = fixed->second;
        best = std::move(fixed->first);
        warm = report.point;
      }
    }
    if (report.feasible) {
      lo = mid;
      warm = report.point;
    } else {
      hi = mid;
    }
    if (total_iter > opts.max_total_iter) {
      throw Error(ErrorCode::kSolverBudgetExceeded,
                  "theta solver exceeded its total iteration budget");
    }
  }

  DegreeRhoRepresentation rep =
      finish(std::move(best), best_level, opts.feasibility_tol, rho_tag);
  rep.iterations = total_iter;
  rep.feasibility_calls = calls;
  return rep;
}

void check_rho(double rho) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kOutOfRange, "rho must be a finite value >= 1");
  }
}

}  // namespace

DegreeRhoRepresentation theta_rho(const BhattacharyyaMatrix& b, double rho,
                                  const ThetaOptions& opts) {
  check_rho(rho);
  try {
    return solve(b, rho, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoConvergence) {
      throw Error(ErrorCode::kSolverBudgetExceeded, e.what());
    }
    throw;
  }
}

DegreeRhoRepresentation theta_lovasz(const BhattacharyyaMatrix& b,
                                     const ThetaOptions& opts) {
  try {
    return solve(b, std::nullopt, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoConvergence) {
      throw Error(ErrorCode::kSolverBudgetExceeded, e.what());
    }
    throw;
  }
}

ExtendedReal rho_bar(const BhattacharyyaMatrix& b, double rho_hi, double tol) {
  if (!(rho_hi > 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "rho_hi must exceed 1");
  }
  // Work in s = 1/rho, scanning from s = 1 towards s = 1/rho_hi.
  auto psd_at = [&](double s) {
    return eigh(elementwise_root(b.coeff, 1.0 / s)).values.front() >= -tol;
  };
  constexpr double kStep = 0.01;
  const double s_min = 1.0 / rho_hi;

  double ok = 1.0;
  double bad = -1.0;
  for (int i = 1;; ++i) {
    const double s = std::max(1.0 - kStep * i, s_min);
    if (!psd_at(s)) {
      bad = s;
      break;
    }
    ok = s;
    if (s == s_min) break;
  }
  if (bad < 0.0) return ExtendedReal::infinity();

  while (ok - bad > 1e-12) {
    const double mid = 0.5 * (ok + bad);
    (psd_at(mid) ? ok : bad) = mid;
  }
  return ExtendedReal(1.0 / ok);
}

bool ThetaCurve::complete() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const ThetaSample& s) { return s.ok; });
}

ThetaCurve theta_curve(const BhattacharyyaMatrix& b,
                       const std::vector<double>& rho_grid,
                       const ThetaOptions& opts) {
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    check_rho(rho_grid[i]);
    if (i > 0 && !(rho_grid[i] > rho_grid[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "rho grid must be increasing");
    }
  }

  ThetaCurve curve;
  curve.samples.resize(rho_grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rho_grid.size(); i = next++) {
      ThetaSample& s = curve.samples[i];
      s.rho = rho_grid[i];
      try {
        const DegreeRhoRepresentation rep = theta_rho(b, s.rho, opts);
        s.theta_nats = rep.theta_nats;
        s.handle_level = rep.handle_level;
        s.iterations = rep.iterations;
        s.feasibility_calls = rep.feasibility_calls;
      } catch (const Error& e) {
        s.ok = false;
        s.error = e.what();
      }
    }
  };

  unsigned threads =
      opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(rho_grid.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return curve;
}

bool representation_nonnegativity(const DegreeRhoRepresentation& rep,
                                  double tol) {
  const std::size_t k = rep.inputs();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t xp = x + 1; xp < k; ++xp) {
      if (rep.gram(x, xp) < -tol) return false;
    }
  }
  return true;
}

}  // namespace thetarho
