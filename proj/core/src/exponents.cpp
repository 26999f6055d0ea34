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

#include "thetarho/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "thetarho/error.hpp"
#include "thetarho/theta.hpp"

namespace thetarho {

const char* to_string(StartKind kind) {
  switch (kind) {
    case StartKind::kUniform: return "uniform";
    case StartKind::kVertex: return "vertex";
    case StartKind::kRandom: return "random";
  }
  return "unknown";
}

namespace {

using Vec = std::vector<double>;

// Euclidean projection onto the probability simplex (sort-and-threshold).
Vec project_simplex(const Vec& v) {
  Vec sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0;
  double shift = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumsum += sorted[i];
    const double t = (cumsum - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0.0) shift = t;
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - shift, 0.0);
  return out;
}

Vec multiply(const SymMatrix& a, const Vec& p) {
  Vec out(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) sum += a(i, j) * p[j];
    out[i] = sum;
  }
  return out;
}

double dot(const Vec& a, const Vec& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double quad(const SymMatrix& a, const Vec& p) { return dot(p, multiply(a, p)); }

// 53-bit uniform in [0, 1) from raw engine output; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec descend(const SymMatrix& a, Vec p, double step0,
            const SimplexQpOptions& opts) {
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    Vec g = multiply(a, p);
    for (double& gi : g) gi *= 2.0;

    Vec unit_step(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) unit_step[i] = p[i] - g[i];
    const Vec probe = project_simplex(unit_step);
    double pg = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      pg += (p[i] - probe[i]) * (p[i] - probe[i]);
    }
    if (std::sqrt(pg) <= opts.grad_tol) break;

    const double f0 = quad(a, p);
    double t = step0;
    Vec next;
    for (int back = 0; back < 60; ++back, t *= 0.5) {
      Vec trial(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] - t * g[i];
      next = project_simplex(trial);
      Vec d(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) d[i] = next[i] - p[i];
      if (quad(a, next) <= f0 + dot(g, d) + dot(d, d) / (2.0 * t)) break;
    }
    if (next == p) break;
    p = std::move(next);
  }
  return p;
}

}  // namespace

SimplexQpResult min_quadratic_simplex(const SymMatrix& a,
                                      const SimplexQpOptions& opts) {
  const std::size_t k = a.order();
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty quadratic form");
  }

  double row_max = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += std::abs(a(i, j));
    row_max = std::max(row_max, sum);
  }
  const double step0 = row_max > 0.0 ? 1.0 / row_max : 1.0;

  std::vector<std::pair<StartKind, Vec>> starts;
  starts.emplace_back(StartKind::kUniform,
                      Vec(k, 1.0 / static_cast<double>(k)));
  for (std::size_t v = 0; v < k; ++v) {
    Vec e(k, 0.0);
    e[v] = 1.0;
    starts.emplace_back(StartKind::kVertex, std::move(e));
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t r = 0; r < opts.random_starts; ++r) {
    Vec p(k);
    double total = 0.0;
    for (double& pi : p) {
      pi = -std::log(1.0 - unit_uniform(rng));  // Dirichlet(1, ..., 1)
      total += pi;
    }
    for (double& pi : p) pi /= total;
    starts.emplace_back(StartKind::kRandom, std::move(p));
  }

  SimplexQpResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& [kind, start] : starts) {
    Vec p = descend(a, start, step0, opts);
    const double value = quad(a, p);
    if (value < best.value) {
      best.value = value;
      best.distribution = std::move(p);
      best.best_start = kind;
    }
  }
  best.starts_used = starts.size();
  best.certified =
      eigh(a).values.front() >= -1e-12 * std::max(1.0, a.frobenius_norm());
  return best;
}

namespace {

ExponentResult to_exponent(const SimplexQpResult& qp, double scale) {
  ExponentResult r;
  r.value_nats = -scale * std::log(qp.value);
  r.distribution = qp.distribution;
  r.starts_used = qp.starts_used;
  r.best_start_kind = qp.best_start;
  r.certified = qp.certified;
  return r;
}

}  // namespace

ExponentResult cutoff_rate(const BhattacharyyaMatrix& b,
                           const SimplexQpOptions& opts) {
  return to_exponent(min_quadratic_simplex(b.coeff, opts), 1.0);
}

ExponentResult expurgated_coeff(const BhattacharyyaMatrix& b, double rho,
                                const SimplexQpOptions& opts) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kOutOfRange, "rho must be a finite value >= 1");
  }
  return to_exponent(min_quadratic_simplex(elementwise_root(b.coeff, rho), opts),
                     rho);
}

BhattacharyyaMatrix kron_power_bhatt(const BhattacharyyaMatrix& b,
                                     std::size_t n) {
  if (n != 1 && n != 2) {
    throw Error(ErrorCode::kInvalidArgument, "only n = 1 and n = 2 supported");
  }
  if (n == 1) return b;
  const std::size_t k = b.order();
  const std::size_t k2 = k * k;
  if (k2 > kMaxKronOrder) {
    throw Error(ErrorCode::kOrderOverflow, "K^n exceeds the supported order");
  }
  BhattacharyyaMatrix out{SymMatrix(k2), std::vector<bool>(k2 * k2, false)};
  for (std::size_t i = 0; i < k2; ++i) {
    for (std::size_t j = i; j < k2; ++j) {
      const std::size_t x = i / k, y = i % k, xp = j / k, yp = j % k;
      out.coeff.set(i, j, b(x, xp) * b(y, yp));
      const bool disjoint = b.disjoint(x, xp) || b.disjoint(y, yp);
      out.support_disjoint[i * k2 + j] = disjoint;
      out.support_disjoint[j * k2 + i] = disjoint;
    }
  }
  return out;
}

}  // namespace thetarho
