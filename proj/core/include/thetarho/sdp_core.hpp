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

#ifndef THETARHO_SDP_CORE_HPP_
#define THETARHO_SDP_CORE_HPP_

// Dense symmetric linear algebra and the PSD-cone / entry-box feasibility
// kernel. Orders here are small (tens at most), so everything is dense and
// single-threaded.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace thetarho {

/// Row-major dense matrix. Used for eigenvector bases and factorizations.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Symmetric matrix. The only mutator writes both (i, j) and (j, i), so the
/// stored entries are exactly symmetric at all times.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order, double fill = 0.0)
      : order_(order), data_(order * order, fill) {}

  static SymMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * order_ + j] = v;
    data_[j * order_ + i] = v;
  }
  /// Full row-major storage.
  std::span<const double> entries() const { return data_; }

  double frobenius_norm() const;
  double max_abs() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Entrywise bounds lower(i,j) <= S(i,j) <= upper(i,j). Equality constraints
/// have lower == upper; unbounded sides use +/- infinity.
struct EntryBox {
  SymMatrix lower;
  SymMatrix upper;

  static constexpr double kUnbounded = std::numeric_limits<double>::infinity();

  /// Box of the given order with every entry unconstrained.
  static EntryBox unconstrained(std::size_t order);
  std::size_t order() const { return lower.order(); }
  void fix(std::size_t i, std::size_t j, double v) {
    lower.set(i, j, v);
    upper.set(i, j, v);
  }
  void bound(std::size_t i, std::size_t j, double lo, double hi) {
    lower.set(i, j, lo);
    upper.set(i, j, hi);
  }
  bool contains(const SymMatrix& s, double tol = 0.0) const;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

inline constexpr double kDefaultEigenTolerance = 1e-13;
inline constexpr int kDefaultJacobiSweeps = 100;

/// Cyclic Jacobi eigendecomposition. Stops once the off-diagonal Frobenius
/// mass is below tol * ||S||_F; throws Error(kNoConvergence) when the sweep
/// budget runs out first.
EigenDecomposition eigh(const SymMatrix& s,
                        double tol = kDefaultEigenTolerance,
                        int max_sweeps = kDefaultJacobiSweeps);

/// Frobenius-nearest PSD matrix (negative eigenvalues clamped to zero).
SymMatrix psd_project(const SymMatrix& s);

/// Frobenius distance from s to the PSD cone.
double psd_distance(const SymMatrix& s);

SymMatrix box_project(const SymMatrix& s, const EntryBox& box);
double box_distance(const SymMatrix& s, const EntryBox& box);

struct FeasibilityReport {
  SymMatrix point;  // the box-side iterate
  double residual_psd = 0.0;  // distance of `point` to the PSD cone
  double residual_box = 0.0;  // distance of the PSD-side iterate to the box
  std::size_t iterations = 0;
  bool feasible = false;
};

inline constexpr double kDefaultFeasibilityTolerance = 1e-8;
inline constexpr std::size_t kDefaultFeasibilityIterations = 50000;

/// Dykstra's alternating projections between the PSD cone and `box`.
///
/// Reports feasible as soon as both residuals drop to `tol`. Infeasibility is
/// heuristic: it is declared only when `max_iter` iterations pass without
/// reaching `tol`, and no dual certificate is produced.
FeasibilityReport dykstra_feasibility(
    const EntryBox& box, const SymMatrix& start,
    double tol = kDefaultFeasibilityTolerance,
    std::size_t max_iter = kDefaultFeasibilityIterations);

/// Factor G = V^T V. Returns an r x order matrix whose columns are the
/// vectors; r is the number of eigenvalues above tol. Throws Error(kNotPsd)
/// if some eigenvalue is below -tol.
Matrix gram_factor(const SymMatrix& g, double tol);

}  // namespace thetarho

#endif  // THETARHO_SDP_CORE_HPP_
