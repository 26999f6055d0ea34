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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace thetarho;
using namespace thetarho::cli;

namespace {

std::string fixture(const char* name) {
  return std::string(THETARHO_FIXTURES_DIR) + "/" + name;
}

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "thetarho");
  return parse_args(static_cast<int>(args.size()), args.data());
}

std::string usage_message(std::vector<const char*> args) {
  try {
    parse(std::move(args));
  } catch (const UsageError& e) {
    return e.what();
  }
  return {};
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_args(std::vector<const char*> args) {
  std::ostringstream out, err;
  const int code = run(parse(std::move(args)), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_args") {
  const RunConfig c = parse({"theta", "--bsc", "0.1", "--rho", "2"});
  CHECK(c.command == Command::kTheta);
  CHECK(c.channel.kind == ChannelSource::Kind::kBsc);
  CHECK(c.channel.eps == 0.1);
  REQUIRE(c.rho_grid.size() == 1);
  CHECK(c.rho_grid[0] == 2.0);
  CHECK(c.unit == Unit::kNats);

  const RunConfig t = parse({"curve", "--typewriter", "5", "0.5", "--rho-grid",
                             "1:2:0.5", "--out", "x.csv", "--bits"});
  CHECK(t.command == Command::kCurve);
  CHECK(t.channel.kind == ChannelSource::Kind::kTypewriter);
  CHECK(t.channel.inputs == 5);
  CHECK(t.rho_grid == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(t.output_path == "x.csv");
  CHECK(t.unit == Unit::kBits);

  const RunConfig v = parse({"verify", "--channel", "f.json", "--rho", "1",
                             "--codes", "5", "--n", "4", "--M", "8",
                             "--seed", "3"});
  CHECK(v.channel.kind == ChannelSource::Kind::kFile);
  CHECK(v.channel.path == "f.json");
  CHECK(v.codes == 5);
  CHECK(v.block_length == 4u);
  CHECK(v.codewords == 8u);
  CHECK(v.seed == 3);
}

TEST_CASE("usage errors name the offending flag") {
  CHECK(usage_message({"theta", "--bsc", "0.1", "--rho", "0.5"})
            .find("--rho") != std::string::npos);
  CHECK(usage_message({"theta", "--bsc", "0.7", "--rho", "1"})
            .find("--bsc") != std::string::npos);
  CHECK(usage_message({"theta", "--bsc", "0.1", "--rho-grid", "2:1:0.5"})
            .find("--rho-grid") != std::string::npos);
  CHECK(usage_message({"theta", "--bsc", "0.1", "--rho-grid", "2,1"})
            .find("--rho-grid") != std::string::npos);
  CHECK(usage_message({"theta", "--bsc", "0.1", "--bogus"}).size() > 0);
  CHECK(usage_message({"frobnicate", "--bsc", "0.1"}).size() > 0);
  CHECK(usage_message({"theta", "--rho", "1"}).size() > 0);
  CHECK(usage_message({"theta", "--bsc", "0.1", "--rho", "1", "--rho-grid",
                       "1,2"})
            .size() > 0);
}

TEST_CASE("parse_rho_grid") {
  CHECK(parse_rho_grid("1:6:0.25").size() == 21);
  CHECK(parse_rho_grid("1:6:0.25").back() == doctest::Approx(6.0));
  CHECK(parse_rho_grid("1,2,4,8") == std::vector<double>{1, 2, 4, 8});
  CHECK(parse_rho_grid("3") == std::vector<double>{3});
  CHECK_THROWS_AS(parse_rho_grid("1:2:0"), UsageError);
  CHECK_THROWS_AS(parse_rho_grid("1:2"), UsageError);
  CHECK_THROWS_AS(parse_rho_grid("a,b"), UsageError);
}

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(std::log(1.25)) == "0.223143551");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(1e-5).find('e') != std::string::npos);
  CHECK(std::stod(format_number(1.0 / 3.0)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("channel JSON") {
  const Channel p = load_channel_json(fixture("pentagon.json"));
  CHECK(p.inputs() == 5);
  CHECK(p.name() == "pentagon");
  const Channel r = load_channel_json(fixture("random4.json"));
  CHECK(r.outputs() == 4);
  CHECK_THROWS(parse_channel_json("{\"W\": 3}"));
  CHECK_THROWS(parse_channel_json("not json"));
  CHECK_THROWS(parse_channel_json("{\"W\": [[0.5, 0.6]]}"));
  CHECK_THROWS(load_channel_json(fixture("missing.json")));
  CHECK(parse_channel_json("{\"W\": [[1, 0], [0, 1]]}", "eye").name() == "eye");
}

TEST_CASE("run: single values") {
  Captured c = run_args({"cutoff", "--bsc", "0.1"});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "0.223143551\n");

  c = run_args({"cutoff", "--bsc", "0.1", "--bits"});
  CHECK(std::stod(c.out) == doctest::Approx(std::log(1.25) / std::log(2.0)));

  c = run_args({"theta", "--channel", fixture("identity2.json").c_str(),
                "--rho", "3"});
  CHECK(c.code == kExitOk);
  CHECK(std::stod(c.out) == doctest::Approx(std::log(2.0)).epsilon(1e-6));

  c = run_args({"rhobar", "--bsc", "0.1"});
  CHECK(c.out == "inf\n");
}

TEST_CASE("run: CSV output is deterministic") {
  const std::vector<const char*> args{"curve", "--bsc", "0.1", "--rho-grid",
                                      "1:2:0.5"};
  const Captured a = run_args(args);
  const Captured b = run_args(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("rho,theta,ex_over_rho,R,E_upper\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : a.out) lines += ch == '\n';
  CHECK(lines == 4);
}

TEST_CASE("run: verify") {
  const Captured c = run_args({"verify", "--bsc", "0.1", "--rho", "2",
                               "--codes", "20", "--n", "4", "--M", "8",
                               "--seed", "5"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("PASS") != std::string::npos);
  CHECK(c.out.find("FAIL") == std::string::npos);

  const Captured bad = run_args({"verify", "--bsc", "0.1", "--rho", "2",
                                 "--n", "2", "--M", "9"});
  CHECK(bad.code != kExitOk);
}
