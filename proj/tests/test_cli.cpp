// Copyright 2026 The liftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "liftlab/cli.hpp"
#include "liftlab/json_io.hpp"

using namespace liftlab;
using Catch::Matchers::WithinAbs;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liftlab");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_check(const Json& report, const std::string& name) {
  for (const Json& c : report["checks"]) {
    if (c["name"] == name) return true;
  }
  return false;
}

const Json& check(const Json& report, const std::string& name) {
  for (const Json& c : report["checks"]) {
    if (c["name"] == name) return c;
  }
  FAIL("missing check " << name);
  return report;
}

}  // namespace

TEST_CASE("channel dilate yields the ancilla-controlled flip", "[cli]") {
  const Run r = run({"channel", "dilate", "--n", "2", "--perm", "[0,3,2,1]", "--sigma", "[0.7,0.3]"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["channel"] == Json::parse("[[0.7,0.3],[0.3,0.7]]"));
  CHECK(r.json()["doubly_stochastic"] == true);
}

TEST_CASE("channel apply with the identity echoes the input", "[cli]") {
  const Run r = run({"channel", "apply", "--matrix", "I", "--p", "[0.2,0.3,0.5]"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["state"] == Json::parse("[0.2,0.3,0.5]"));
}

TEST_CASE("channel kraus self-check", "[cli]") {
  const Run r = run({"channel", "kraus", "--verify", "--matrix",
                     "[[0.5,0.25,0.25],[0.1,0.6,0.3],[0,0,1]]"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["kraus"].size() == 7);
  CHECK(r.json()["verify"]["passed"] == true);
}

TEST_CASE("lift bell reproduces the worked spectrum", "[cli]") {
  const Run r = run({"lift", "bell", "--p", "[0.75,0.25]", "--rho", "diag(0.6,0.4)"});
  REQUIRE(r.code == 0);
  const Json p = r.json()["spectrum"]["p"];
  CHECK_THAT(p[0][0].get<double>(), WithinAbs(0.45, 1e-15));
  CHECK_THAT(p[0][1].get<double>(), WithinAbs(0.30, 1e-15));
  CHECK_THAT(p[1][0].get<double>(), WithinAbs(0.15, 1e-15));
  CHECK_THAT(p[1][1].get<double>(), WithinAbs(0.10, 1e-15));
}

TEST_CASE("lift ohya marginals equal the input", "[cli]") {
  const Run r = run({"lift", "ohya", "--rho",
                     R"({"rows":2,"cols":2,"data":[0.7,[0.1,0.1],[0.1,-0.1],0.3]})"});
  REQUIRE(r.code == 0);
  const ComplexMatrix rho = matrix_from_json(parse_json(R"({"rows":2,"cols":2,"data":[0.7,[0.1,0.1],[0.1,-0.1],0.3]})"));
  for (const Json& m : r.json()["marginals"]) {
    CHECK((matrix_from_json(m) - rho).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("lift nonlinear of the identity at the maximally mixed state", "[cli]") {
  const Run r = run({"lift", "nonlinear", "--map", "I", "--rho", "[0.5,0.5]"});
  REQUIRE(r.code == 0);
  const ComplexMatrix theta = matrix_from_json(r.json()["state"]);
  CHECK((theta - max_entangled(2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("lift circulant reports PPT blocks", "[cli]") {
  const Run r = run({"lift", "circulant", "--spec",
                     R"({"d":2,"blocks":[[[0.5,0.5],[0.5,0.5]],[[0,0],[0,0]]]})"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["ppt"] == false);
}

TEST_CASE("lift nlift with a tensor clones classically", "[cli]") {
  const Run r = run({"lift", "nlift", "--parties", "3", "--tensor",
                     R"({"n1":2,"n2":2,"data":[1,0,0,0,0,0,0,1]})", "--p", "[0.25,0.75]"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["marginals"].size() == 3);
}

TEST_CASE("teleport transcript", "[cli]") {
  const Run r = run({"teleport", "--p", "[0.5,0.3,0.2]", "--perm", "[1,2,0]"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["bob_state"] == Json::parse("[0.2,0.5,0.3]"));
  CHECK(r.json()["corrected"] == Json::parse("[0.5,0.3,0.2]"));
  CHECK(r.json()["recovered"] == true);
}

TEST_CASE("verify circulant includes the PPT oracle check", "[cli]") {
  const Run r = run({"verify", "circulant", "--seed", "7", "--trials", "30"});
  CHECK(r.code == 0);
  CHECK(has_check(r.json(), "ppt-oracle-agreement"));
  CHECK(r.json()["timestamp"].is_null());
}

TEST_CASE("verify qlift includes the Robertson eigenvalue check", "[cli]") {
  const Run r = run({"verify", "qlift", "--seed", "3", "--trials", "10"});
  CHECK(r.code == 0);
  const Json report = r.json();
  const Json& c = check(report, "robertson-choi-min-eigenvalue");
  CHECK(c["passed"] == true);
  CHECK(c["tolerance"].get<double>() == 1e-12);
}

TEST_CASE("verify reports are deterministic and sorted", "[cli]") {
  const Run a = run({"verify", "all", "--seed", "42", "--trials", "5"});
  const Run b = run({"verify", "all", "--seed", "42", "--trials", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json report = a.json();
  for (std::size_t k = 1; k < report["checks"].size(); ++k) {
    CHECK(report["checks"][k - 1]["name"].get<std::string>() < report["checks"][k]["name"].get<std::string>());
  }
  for (const Json& c : report["checks"]) CHECK_FALSE(c["anchor"].get<std::string>().empty());
}

TEST_CASE("LIFTLAB_SEED is the fallback seed", "[cli]") {
  const Run explicit_seed = run({"verify", "clift", "--seed", "9", "--trials", "5"});
  ::setenv("LIFTLAB_SEED", "9", 1);
  const Run env_seed = run({"verify", "clift", "--trials", "5"});
  ::setenv("LIFTLAB_SEED", "nine", 1);
  const Run bad = run({"verify", "clift", "--trials", "5"});
  ::unsetenv("LIFTLAB_SEED");
  CHECK(env_seed.out == explicit_seed.out);
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("verify --out writes the report to a file", "[cli]") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "liftlab_report.json";
  const Run r = run({"verify", "matcore", "--trials", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_json(buf.str())["suite"] == "matcore");
  std::filesystem::remove(path);
}

TEST_CASE("a tightened tolerance makes checks fail with exit 1", "[cli]") {
  const Run r = run({"verify", "qlift", "--seed", "1", "--trials", "5", "--tol", "0"});
  CHECK(r.code == kExitCheckFailed);
}

TEST_CASE("exit codes separate usage from math-domain errors", "[cli]") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify", "nosuchsuite"}).code == kExitUsage);
  CHECK(run({"channel", "apply", "--matrix", "[[1,0],[0,1]", "--p", "[1,0]"}).code == kExitUsage);
  CHECK(run({"channel", "dilate", "--perm", "[0,1,2]", "--sigma", "[0.5,0.5]"}).code == kExitUsage);
  const Run npsd = run({"lift", "ohya", "--rho", "[[1.5,0],[0,-0.5]]"});
  CHECK(npsd.code == kExitMath);
  CHECK(parse_json(npsd.err)["error"] == "NotPSD");
  CHECK(run({"lift", "qcp", "--map", R"({"d":1,"units":[[[2]]]})"}).code == kExitMath);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("inputs can be read from files", "[cli]") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "liftlab_p.json";
  std::ofstream(path) << "[0.25,0.75]";
  const Run r = run({"channel", "apply", "--matrix", "[[0,1],[1,0]]", "--p", "@" + path.string()});
  CHECK(r.code == 0);
  CHECK(r.json()["state"] == Json::parse("[0.75,0.25]"));
  std::filesystem::remove(path);
}
