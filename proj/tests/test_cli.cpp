// Copyright 2026 The zxeval developers
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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "zxeval/ansatz.hpp"
#include "zxeval/json_io.hpp"

using namespace zxeval;

namespace {

std::string data(const char* name) { return std::string(ZXEVAL_TEST_DATA_DIR) + "/" + name; }

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("angle literals", "[cli]") {
  const double pi = std::numbers::pi;
  CHECK(cli::parse_angle("pi") == Catch::Approx(pi));
  CHECK(cli::parse_angle("-pi/2") == Catch::Approx(-pi / 2));
  CHECK(cli::parse_angle("3pi/4") == Catch::Approx(3 * pi / 4));
  CHECK(cli::parse_angle("2pi") == Catch::Approx(2 * pi));
  CHECK(cli::parse_angle("0.5") == Catch::Approx(0.5));
  CHECK(cli::parse_angle("-1.25e-1") == Catch::Approx(-0.125));
}

TEST_CASE("expval on bound product rotations", "[cli]") {
  auto r = run({"expval", "--graph", data("k2.txt"), "--ansatz", "ry", "--edge", "0,1", "--bind",
                "alpha_0=0", "--bind", "alpha_1=0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("edge 0,1") != std::string::npos);
  CHECK(r.out.find("= 1") != std::string::npos);
}

TEST_CASE("expval json carries an equivalent expression", "[cli]") {
  auto r = run({"expval", "--graph", data("ring8.txt"), "--ansatz", "qaoa", "--p", "1", "--edge",
                "0,1", "--lightcone", "--out", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  ScalarExpr expr = scalar_expr_from_json(doc["edges"][0]["expr"]);
  ScalarExpr want = ScalarExpr::integer(2) * ScalarExpr::cos(LinearPhase::parameter("beta")) *
                    ScalarExpr::sin(LinearPhase::parameter("beta")) *
                    ScalarExpr::sin(LinearPhase::parameter("gamma")) *
                    ScalarExpr::cos(LinearPhase::parameter("gamma"));
  CHECK(equiv_numeric(expr, want));
}

TEST_CASE("text and json values agree", "[cli]") {
  std::vector<std::string> base{"expval", "--graph", data("triangle.txt"), "--ansatz",  "qaoa",
                                "--edge", "0,1",     "--bind",             "gamma=pi/5", "--bind",
                                "beta=0.3"};
  auto text = run(base);
  auto jsonargs = base;
  jsonargs.push_back("--out");
  jsonargs.push_back("json");
  auto js = run(jsonargs);
  REQUIRE(text.code == 0);
  REQUIRE(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  double jv = doc["edges"][0]["value"]["re"].get<double>();
  // the text line ends with "= <value>"
  auto pos = text.out.rfind("= ");
  REQUIRE(pos != std::string::npos);
  double tv = std::stod(text.out.substr(pos + 2));
  CHECK(tv == Catch::Approx(jv).margin(1e-9));
}

TEST_CASE("formula subcommand prints the closed form", "[cli]") {
  auto r = run({"formula", "--graph", data("fig_example.txt"), "--edge", "1,2", "--out", "json"});
  REQUIRE(r.code == 0);
  ScalarExpr expr = scalar_expr_from_json(nlohmann::json::parse(r.out));
  ProblemGraph g = load_graph_file(data("fig_example.txt"));
  CHECK(equiv_numeric(expr, qaoa1_closed_form(g, {1, 2})));
}

TEST_CASE("lightcone subcommand emits the reduced instance", "[cli]") {
  auto r = run({"lightcone", "--graph", data("ring8.txt"), "--edge", "3,4", "--p", "1"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["edges"].size() == 3);
  CHECK(doc["edge"][0] == 1);
  CHECK(doc["edge"][1] == 2);
  CHECK(doc["qubit_map"][0][0] == 2);
  CHECK(doc["qubit_map"][0][1] == 0);
}

TEST_CASE("simplify subcommand round trips through JSON", "[cli]") {
  // a chain of five phase-free spiders on one wire
  DiagramBuilder b;
  VertexId in = b.input();
  VertexId prev = in;
  for (int i = 0; i < 5; ++i) {
    VertexId s = b.z();
    b.wire(prev, s);
    prev = s;
  }
  VertexId out = b.output();
  b.wire(prev, out);
  Diagram chain = b.build({in}, {out});
  std::string in_path = std::string(ZXEVAL_TEST_DATA_DIR) + "/tmp_chain.json";
  {
    std::ofstream os(in_path);
    os << to_json(chain).dump();
  }
  auto r = run({"simplify", "--in", in_path, "--out", "-"});
  std::remove(in_path.c_str());
  REQUIRE(r.code == 0);
  Diagram reduced = diagram_from_json(nlohmann::json::parse(r.out));
  CHECK(reduced.vertices().size() == 3);

  auto bad = run({"simplify", "--in", in_path, "--rules", "zz"});
  CHECK(bad.code == 2); // file already removed
}

TEST_CASE("check certifies the pipeline", "[cli]") {
  auto r = run({"check", "--graph", data("fig_example.txt"), "--ansatz", "qaoa", "--p", "1",
                "--trials", "4", "--tol", "1e-9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("error channels", "[cli]") {
  auto missing = run({"expval", "--graph", "/nonexistent.txt", "--ansatz", "ry"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("E2:", 0) == 0);

  auto badedge =
      run({"expval", "--graph", data("ring8.txt"), "--ansatz", "qaoa", "--edge", "0,4"});
  CHECK(badedge.code == 1);
  CHECK(badedge.err.rfind("E1:", 0) == 0);

  auto usage = run({"frobnicate"});
  CHECK(usage.code == 1);

  auto budget = run({"expval", "--graph", data("fig_example.txt"), "--ansatz", "qaoa", "--edge",
                     "1,2", "--budget", "2"});
  CHECK(budget.code == 3);
  CHECK(budget.err.rfind("E3:", 0) == 0);
}
