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

#ifndef THETARHO_ERROR_HPP_
#define THETARHO_ERROR_HPP_

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thetarho {

enum class ErrorCode {
  kEmptyMatrix,
  kNonStochasticRow,
  kNegativeEntry,
  kOutOfRange,
  kSameSymbol,
  kNoConvergence,
  kNotPsd,
  kSolverBudgetExceeded,
  kOrderOverflow,
  kTooManyCodewords,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A real number or the +infinity sentinel. The sentinel is a tag, so that
/// serializers never see a floating-point infinity by accident.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; +inf as a double when the sentinel is set.
  constexpr double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend constexpr bool operator==(const ExtendedReal&,
                                   const ExtendedReal&) = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace thetarho

#endif  // THETARHO_ERROR_HPP_
