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

#include "thetarho/sdp_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thetarho/error.hpp"

namespace thetarho {

SymMatrix SymMatrix::identity(std::size_t order) {
  SymMatrix s(order);
  for (std::size_t i = 0; i < order; ++i) s.set(i, i, 1.0);
  return s;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

EntryBox EntryBox::unconstrained(std::size_t order) {
  return {SymMatrix(order, -kUnbounded), SymMatrix(order, kUnbounded)};
}

bool EntryBox::contains(const SymMatrix& s, double tol) const {
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = i; j < s.order(); ++j) {
      if (s(i, j) < lower(i, j) - tol || s(i, j) > upper(i, j) + tol) {
        return false;
      }
    }
  }
  return true;
}

EigenDecomposition eigh(const SymMatrix& s, double tol, int max_sweeps) {
  const std::size_t n = s.order();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "eigh of empty matrix");

  Matrix a(n, n);
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    v(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) a(i, j) = s(i, j);
  }

  const double target = tol * s.frobenius_norm();
  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(sum);
  };

  bool converged = off_norm() <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = c * arp - sn * arq;
            a(p, r) = a(r, p);
            a(r, q) = sn * arp + c * arq;
            a(q, r) = a(r, q);
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - sn * vrq;
          v(r, q) = sn * vrp + c * vrq;
        }
      }
    }
    converged = off_norm() <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence, "Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

namespace {

// V diag(f(lambda)) V^T.
template <typename F>
SymMatrix reassemble(const EigenDecomposition& e, F&& f) {
  const std::size_t n = e.values.size();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = f(e.values[k]);
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (w[k] != 0.0) sum += w[k] * e.vectors(i, k) * e.vectors(j, k);
      }
      out.set(i, j, sum);
    }
  }
  return out;
}

}  // namespace

SymMatrix psd_project(const SymMatrix& s) {
  const EigenDecomposition e = eigh(s);
  if (e.values.front() >= 0.0) return s;
  return reassemble(e, [](double l) { return std::max(l, 0.0); });
}

double psd_distance(const SymMatrix& s) {
  const EigenDecomposition e = eigh(s);
  double sum = 0.0;
  for (double l : e.values) {
    if (l < 0.0) sum += l * l;
  }
  return std::sqrt(sum);
}

SymMatrix box_project(const SymMatrix& s, const EntryBox& box) {
  if (box.order() != s.order()) {
    throw Error(ErrorCode::kInvalidArgument, "box order mismatch");
  }
  SymMatrix out(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = i; j < s.order(); ++j) {
      out.set(i, j, std::clamp(s(i, j), box.lower(i, j), box.upper(i, j)));
    }
  }
  return out;
}

double box_distance(const SymMatrix& s, const EntryBox& box) {
  double sum = 0.0;
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = 0; j < s.order(); ++j) {
      const double d =
          s(i, j) - std::clamp(s(i, j), box.lower(i, j), box.upper(i, j));
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

FeasibilityReport dykstra_feasibility(const EntryBox& box,
                                      const SymMatrix& start, double tol,
                                      std::size_t max_iter) {
  const std::size_t n = box.order();
  if (start.order() != n) {
    throw Error(ErrorCode::kInvalidArgument, "start order mismatch");
  }

  FeasibilityReport report;
  SymMatrix x = box_project(start, box);
  SymMatrix p(n);  // PSD-step increment
  SymMatrix q(n);  // box-step increment

  report.residual_psd = psd_distance(x);
  report.residual_box = 0.0;
  if (report.residual_psd <= tol) {
    report.point = std::move(x);
    report.feasible = true;
    return report;
  }

  for (std::size_t it = 1; it <= max_iter; ++it) {
    const SymMatrix xp = x + p;
    const SymMatrix y = psd_project(xp);
    p = xp - y;
    const SymMatrix yq = y + q;
    x = box_project(yq, box);
    q = yq - x;

    report.iterations = it;
    report.residual_box = box_distance(y, box);
    if (report.residual_box <= tol) {
      report.residual_psd = psd_distance(x);
      if (report.residual_psd <= tol) {
        report.feasible = true;
        break;
      }
    }
  }
  if (!report.feasible) report.residual_psd = psd_distance(x);
  report.point = std::move(x);
  return report;
}

Matrix gram_factor(const SymMatrix& g, double tol) {
  const EigenDecomposition e = eigh(g);
  if (e.values.front() < -tol) {
    throw Error(ErrorCode::kNotPsd, "gram_factor: matrix is not PSD");
  }
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    if (e.values[k] > tol) kept.push_back(k);
  }
  // Largest eigenvalue first, so row 0 is the dominant direction.
  std::reverse(kept.begin(), kept.end());

  Matrix vecs(kept.size(), g.order());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const double scale = std::sqrt(e.values[kept[r]]);
    for (std::size_t i = 0; i < g.order(); ++i) {
      vecs(r, i) = scale * e.vectors(i, kept[r]);
    }
  }
  return vecs;
}

}  // namespace thetarho
