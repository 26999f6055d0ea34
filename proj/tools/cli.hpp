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

#ifndef THETARHO_TOOLS_CLI_HPP_
#define THETARHO_TOOLS_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetarho/channel.hpp"

namespace thetarho::cli {

enum class Command {
  kTheta,
  kLovasz,
  kCutoff,
  kExpurgated,
  kRhoBar,
  kCurve,
  kBound,
  kVerify,
};

enum class Unit { kNats, kBits };

struct ChannelSource {
  enum class Kind { kFile, kBsc, kTypewriter };
  Kind kind = Kind::kBsc;
  std::string path;
  double eps = 0.0;
  std::size_t inputs = 0;
  double q = 0.0;
};

struct RunConfig {
  Command command = Command::kTheta;
  ChannelSource channel;
  std::vector<double> rho_grid;  // >= 1, strictly increasing
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  Unit unit = Unit::kNats;
  std::size_t codes = 1000;
  std::optional<std::size_t> block_length;
  std::optional<std::size_t> codewords;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSolver = 2,
  kExitVerification = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig parse_args(int argc, const char* const* argv);

/// Parses `start:stop:step` (inclusive of stop within 1e-12) or a comma list.
std::vector<double> parse_rho_grid(const std::string& spec);

/// 9 significant digits; lowercase scientific outside [1e-3, 1e6).
std::string format_number(double x);

/// Channel JSON: {"name": string, "W": [[...], ...]}.
Channel load_channel_json(const std::string& path);
Channel parse_channel_json(const std::string& text,
                           const std::string& fallback_name = "channel");

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace thetarho::cli

#endif  // THETARHO_TOOLS_CLI_HPP_
