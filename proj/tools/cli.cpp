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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "thetarho/bounds.hpp"
#include "thetarho/exponents.hpp"
#include "thetarho/theta.hpp"
#include "thetarho/verify.hpp"

namespace thetarho::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"theta", Command::kTheta},   {"lovasz", Command::kLovasz},
    {"cutoff", Command::kCutoff}, {"expurgated", Command::kExpurgated},
    {"rhobar", Command::kRhoBar}, {"curve", Command::kCurve},
    {"bound", Command::kBound},   {"verify", Command::kVerify},
};

double parse_double(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw UsageError(what + ": cannot parse '" + token + "' as a number");
  }
  return v;
}

}  // namespace

std::vector<double> parse_rho_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) {
      throw UsageError("--rho-grid: expected start:stop:step, got '" + spec +
                       "'");
    }
    const double start = parse_double(parts[0], "--rho-grid");
    const double stop = parse_double(parts[1], "--rho-grid");
    const double step = parse_double(parts[2], "--rho-grid");
    if (!(step > 0.0) || !(stop >= start)) {
      throw UsageError("--rho-grid: need step > 0 and stop >= start");
    }
    for (std::size_t i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v > stop + 1e-12) break;
      grid.push_back(v);
    }
  } else {
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ',');) {
      grid.push_back(parse_double(part, "--rho-grid"));
    }
  }
  if (grid.empty()) throw UsageError("--rho-grid: empty grid");
  return grid;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const double mag = std::abs(x);
  if (mag >= 1e-3 && mag < 1e6) {
    const int exponent = static_cast<int>(std::floor(std::log10(mag)));
    const int decimals = std::max(0, 8 - exponent);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  } else {
    std::snprintf(buf, sizeof buf, "%.8e", x);
  }
  return buf;
}

Channel parse_channel_json(const std::string& text,
                           const std::string& fallback_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("channel file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("W") || !doc["W"].is_array()) {
    throw UsageError("channel file: expected an object with array \"W\"");
  }
  Channel::Rows rows;
  for (const auto& row : doc["W"]) {
    if (!row.is_array()) throw UsageError("channel file: \"W\" rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw UsageError("channel file: non-numeric entry");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  std::string name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw UsageError("channel file: \"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  return channel_from_matrix(std::move(rows), std::move(name));
}

Channel load_channel_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--channel: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_channel_json(ss.str(), path);
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Degree-rho orthonormal representations, cut-off rate and "
               "expurgated bounds for discrete memoryless channels",
               "thetarho"};
  std::string command;
  std::string channel_path;
  double eps = -1.0;
  std::pair<long long, double> typewriter{-1, 0.0};
  double rho = 0.0;
  std::string grid_spec;
  RunConfig cfg;
  std::string out_path;
  bool bits = false;
  std::size_t n = 0;
  std::size_t m = 0;

  std::vector<std::string> names;
  for (const auto& kv : kCommands) names.push_back(kv.first);
  app.add_option("command", command, "theta | lovasz | cutoff | expurgated | "
                                     "rhobar | curve | bound | verify")
      ->required()
      ->check(CLI::IsMember(names));
  auto* o_channel = app.add_option("--channel", channel_path,
                                   "JSON channel file {\"name\", \"W\"}");
  auto* o_bsc = app.add_option("--bsc", eps, "binary symmetric channel");
  auto* o_tw = app.add_option("--typewriter", typewriter,
                              "noisy typewriter: <K> <q>");
  auto* o_rho = app.add_option("--rho", rho,
                               "rho >= 1 (rhobar: upper end of the scan)");
  auto* o_grid = app.add_option("--rho-grid", grid_spec,
                                "start:stop:step or comma list");
  app.add_option("--out", out_path, "write CSV here instead of stdout");
  app.add_flag("--bits", bits, "report rates and exponents in bits");
  auto* o_tol = app.add_option("--tol", cfg.tol, "feasibility tolerance");
  app.add_option("--seed", cfg.seed, "base seed for random codes");
  app.add_option("--codes", cfg.codes, "number of random codes (verify)");
  auto* o_n = app.add_option("--n", n, "block length");
  auto* o_m = app.add_option("--M", m, "number of codewords");
  o_rho->excludes(o_grid);
  o_channel->excludes(o_bsc)->excludes(o_tw);
  o_bsc->excludes(o_tw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.command = kCommands.at(command);
  if (!o_channel->empty()) {
    cfg.channel.kind = ChannelSource::Kind::kFile;
    cfg.channel.path = channel_path;
  } else if (!o_bsc->empty()) {
    if (!(eps >= 0.0 && eps <= 0.5)) {
      throw UsageError("--bsc: crossover must lie in [0, 0.5]");
    }
    cfg.channel.kind = ChannelSource::Kind::kBsc;
    cfg.channel.eps = eps;
  } else if (!o_tw->empty()) {
    if (typewriter.first < 2 || !(typewriter.second >= 0.0 &&
                                  typewriter.second <= 1.0)) {
      throw UsageError("--typewriter: need K >= 2 and q in [0, 1]");
    }
    cfg.channel.kind = ChannelSource::Kind::kTypewriter;
    cfg.channel.inputs = static_cast<std::size_t>(typewriter.first);
    cfg.channel.q = typewriter.second;
  } else {
    throw UsageError("one of --channel, --bsc, --typewriter is required");
  }

  if (!o_rho->empty()) {
    cfg.rho_grid = {rho};
  } else if (!o_grid->empty()) {
    cfg.rho_grid = parse_rho_grid(grid_spec);
  }
  const char* grid_flag = o_rho->empty() ? "--rho-grid" : "--rho";
  for (std::size_t i = 0; i < cfg.rho_grid.size(); ++i) {
    if (!(cfg.rho_grid[i] >= 1.0) || !std::isfinite(cfg.rho_grid[i])) {
      throw UsageError(std::string(grid_flag) + ": rho must be >= 1");
    }
    if (i > 0 && !(cfg.rho_grid[i] > cfg.rho_grid[i - 1])) {
      throw UsageError(std::string(grid_flag) + ": values must increase");
    }
  }
  if (cfg.command == Command::kRhoBar && !cfg.rho_grid.empty() &&
      !(cfg.rho_grid.back() > 1.0)) {
    throw UsageError(std::string(grid_flag) + ": rhobar scan limit must exceed 1");
  }

  const bool needs_rho =
      cfg.command == Command::kTheta || cfg.command == Command::kExpurgated ||
      cfg.command == Command::kCurve || cfg.command == Command::kBound ||
      cfg.command == Command::kVerify;
  if (needs_rho && cfg.rho_grid.empty()) {
    throw UsageError(command + " requires --rho or --rho-grid");
  }
  if (!o_tol->empty() && !(cfg.tol > 0.0)) {
    throw UsageError("--tol: must be positive");
  }
  if (!o_n->empty()) {
    if (n < 1) throw UsageError("--n: block length must be >= 1");
    cfg.block_length = n;
  }
  if (!o_m->empty()) {
    if (m < 2) throw UsageError("--M: need at least 2 codewords");
    cfg.codewords = m;
  }
  if ((cfg.command == Command::kBound || cfg.command == Command::kVerify) &&
      (!cfg.block_length || !cfg.codewords)) {
    throw UsageError(command + " requires --n and --M");
  }
  if (cfg.command == Command::kVerify && cfg.codes == 0) {
    throw UsageError("--codes: must be positive");
  }
  if (!out_path.empty()) cfg.output_path = out_path;
  cfg.unit = bits ? Unit::kBits : Unit::kNats;
  return cfg;
}

namespace {

Channel make_channel(const ChannelSource& src) {
  switch (src.kind) {
    case ChannelSource::Kind::kFile: return load_channel_json(src.path);
    case ChannelSource::Kind::kBsc: return bsc(src.eps);
    case ChannelSource::Kind::kTypewriter:
      return noisy_typewriter(src.inputs, src.q);
  }
  throw UsageError("unknown channel source");
}

class Emitter {
 public:
  explicit Emitter(Unit unit)
      : scale_(unit == Unit::kBits ? 1.0 / std::log(2.0) : 1.0) {}
  // Rates and exponents; rho and dimensionless values go through plain().
  std::string rate(double nats) const { return format_number(nats * scale_); }
  std::string rate(const ExtendedReal& v) const {
    return v.is_infinite() ? "inf" : rate(v.value());
  }
  static std::string plain(double v) { return format_number(v); }

 private:
  double scale_;
};

void write_curve(const BoundCurve& curve, const Emitter& fmt,
                 std::ostream& os) {
  os << "rho,theta,ex_over_rho,R,E_upper\n";
  for (const BoundRecord& r : curve.records) {
    os << Emitter::plain(r.rho) << ',' << fmt.rate(r.theta_nats) << ','
       << fmt.rate(r.ex_over_rho) << ',' << fmt.rate(r.rate_nats) << ','
       << fmt.rate(r.e_upper_nats) << '\n';
  }
}

int run_verify(const RunConfig& cfg, const BhattacharyyaMatrix& b,
               const ThetaOptions& opts, std::ostream& out) {
  bool pass = true;
  double global_min = std::numeric_limits<double>::infinity();
  for (double rho : cfg.rho_grid) {
    const DegreeRhoRepresentation rep = theta_rho(b, rho, opts);
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t chain_failures = 0;
    for (std::size_t i = 0; i < cfg.codes; ++i) {
      const CodeSample sample =
          random_code(b, *cfg.block_length, *cfg.codewords, cfg.seed + i);
      min_slack = std::min(min_slack, check_theorem1(sample, rep.theta_nats, rho));
      if (!check_proof_chain(rep, sample).all_ok()) ++chain_failures;
    }
    const bool ok = min_slack >= -1e-9 && chain_failures == 0;
    pass = pass && ok;
    global_min = std::min(global_min, min_slack);
    out << "rho=" << Emitter::plain(rho) << " codes=" << cfg.codes
        << " min_slack=" << Emitter::plain(min_slack)
        << " proof_chain_failures=" << chain_failures << ' '
        << (ok ? "PASS" : "FAIL") << '\n';
  }
  out << (pass ? "PASS" : "FAIL") << " min_slack=" << Emitter::plain(global_min)
      << '\n';
  return pass ? kExitOk : kExitVerification;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Channel> channel;
  try {
    channel.emplace(make_channel(cfg.channel));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: invalid channel: " << e.what() << '\n';
    return kExitUsage;
  }

  const BhattacharyyaMatrix b = bhattacharyya_matrix(*channel);
  ThetaOptions opts;
  opts.feasibility_tol = cfg.tol;
  const Emitter fmt(cfg.unit);

  try {
    switch (cfg.command) {
      case Command::kTheta: {
        const bool single = cfg.rho_grid.size() == 1;
        if (!single) out << "rho,theta\n";
        for (double rho : cfg.rho_grid) {
          const auto rep = theta_rho(b, rho, opts);
          if (!single) out << Emitter::plain(rho) << ',';
          out << fmt.rate(rep.theta_nats) << '\n';
        }
        break;
      }
      case Command::kLovasz:
        out << fmt.rate(theta_lovasz(b, opts).theta_nats) << '\n';
        break;
      case Command::kCutoff:
        out << fmt.rate(cutoff_rate(b).value_nats) << '\n';
        break;
      case Command::kExpurgated: {
        const bool single = cfg.rho_grid.size() == 1;
        if (!single) out << "rho,ex\n";
        for (double rho : cfg.rho_grid) {
          if (!single) out << Emitter::plain(rho) << ',';
          out << fmt.rate(expurgated_coeff(b, rho).value_nats) << '\n';
        }
        break;
      }
      case Command::kRhoBar: {
        const double hi = cfg.rho_grid.empty() ? 100.0 : cfg.rho_grid.back();
        const ExtendedReal r = rho_bar(b, hi);
        out << (r.is_infinite() ? "inf" : Emitter::plain(r.value())) << '\n';
        break;
      }
      case Command::kCurve: {
        const BoundCurve curve = build_er_curve(
            b, cfg.rho_grid, is_pairwise_reversible(*channel), opts);
        if (cfg.output_path) {
          std::ofstream file(*cfg.output_path, std::ios::binary);
          if (!file) {
            err << "error: --out: cannot write '" << *cfg.output_path << "'\n";
            return kExitUsage;
          }
          write_curve(curve, fmt, file);
        } else {
          write_curve(curve, fmt, out);
        }
        if (!curve.complete) {
          err << "error: some curve points failed to solve\n";
          return kExitSolver;
        }
        break;
      }
      case Command::kBound: {
        const CodeParams params(*cfg.codewords, *cfg.block_length);
        for (double rho : cfg.rho_grid) {
          const auto rep = theta_rho(b, rho, opts);
          out << "rho " << Emitter::plain(rho) << '\n'
              << "theta " << fmt.rate(rep.theta_nats) << '\n'
              << "rate " << fmt.rate(params.rate_nats()) << '\n'
              << "theorem1_bound "
              << Emitter::plain(theorem1_bound(params, rep.theta_nats, rho))
              << '\n'
              << "gamma_bound "
              << Emitter::plain(gamma_bound(params, rep.theta_nats, rho))
              << '\n';
        }
        break;
      }
      case Command::kVerify:
        return run_verify(cfg, b, opts, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == ErrorCode::kTooManyCodewords ||
        e.code() == ErrorCode::kOrderOverflow ||
        e.code() == ErrorCode::kInvalidArgument ||
        e.code() == ErrorCode::kOutOfRange) {
      return kExitUsage;
    }
    return kExitSolver;
  }
  return kExitOk;
}

}  // namespace thetarho::cli
