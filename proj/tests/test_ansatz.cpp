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

#include <numbers>

#include "helpers.hpp"
#include "zxeval/ansatz.hpp"
#include "zxeval/evaluator.hpp"
#include "zxeval/oracle.hpp"

using namespace zxeval;
using Catch::Approx;

namespace {
const double kPi = std::numbers::pi;

ProblemGraph ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(edges));
}
ProblemGraph example4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}); }
ProblemGraph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }

ScalarExpr cs(const char* fn, const char* name) {
  LinearPhase p = LinearPhase::parameter(name);
  return fn[0] == 'c' ? ScalarExpr::cos(p) : ScalarExpr::sin(p);
}
} // namespace

TEST_CASE("parameter naming", "[ansatz]") {
  CHECK(ansatz_parameters(path3(), RyProduct{}) ==
        std::vector<std::string>{"alpha_0", "alpha_1", "alpha_2"});
  CHECK(ansatz_parameters(path3(), Qaoa{1}) == std::vector<std::string>{"beta", "gamma"});
  CHECK(ansatz_parameters(path3(), Qaoa{2}) ==
        std::vector<std::string>{"beta_1", "beta_2", "gamma_1", "gamma_2"});
  CHECK(ansatz_parameters(path3(), HwEffSu2{}).size() == 12);
  CHECK_THROWS_MATCHES(build_state(example4(), HwEffSu2{}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::spec_mismatch; }));
}

TEST_CASE("Ry product state at zero angles is the all-zero string", "[ansatz]") {
  ProblemGraph g = path3();
  Diagram state = build_state(g, RyProduct{});
  Binding zero{{"alpha_0", 0.0}, {"alpha_1", 0.0}, {"alpha_2", 0.0}};
  auto m = oracle::contract_numeric(state, zero);
  CHECK(std::abs(m.at(0, 0) - 1.0) < 1e-12);
  for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(m.at(i, 0)) < 1e-12);
}

TEST_CASE("expectation diagrams", "[ansatz]") {
  ProblemGraph k2 = make_graph(2, {{0, 1}});
  Diagram state = build_state(k2, RyProduct{});

  ObservableTerm norm;
  norm.weight = ScalarExpr::one();
  Diagram braket = expectation_diagram(state, norm);
  std::mt19937_64 rng(6);
  Binding binding = oracle::random_binding({"alpha_0", "alpha_1"}, rng);
  CHECK(std::abs(oracle::contract_numeric_closed(braket, binding) - 1.0) < 1e-9);

  ObservableTerm zz;
  zz.weight = ScalarExpr::one();
  zz.z_support = {0, 1};
  Diagram d = expectation_diagram(state, zz);
  auto v = oracle::contract_numeric_closed(d, binding);
  CHECK(std::abs(v - std::cos(binding["alpha_0"]) * std::cos(binding["alpha_1"])) < 1e-9);

  ObservableTerm bad;
  bad.weight = ScalarExpr::one();
  bad.z_support = {5};
  CHECK_THROWS_MATCHES(expectation_diagram(state, bad), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::support_out_of_range;
                       }));

  Diagram q = build_state(example4(), Qaoa{1});
  ObservableTerm mid;
  mid.weight = ScalarExpr::one();
  mid.z_support = {1, 2};
  Diagram qd = expectation_diagram(q, mid);
  Binding qb = oracle::random_binding({"gamma", "beta"}, rng);
  auto qv = oracle::contract_numeric_closed(qd, qb);
  CHECK(std::abs(qv.imag()) < 1e-9);
  CHECK(qv.real() >= -1.0 - 1e-9);
  CHECK(qv.real() <= 1.0 + 1e-9);
}

TEST_CASE("depth-1 closed form instances", "[ansatz]") {
  ScalarExpr two = ScalarExpr::integer(2);
  // ring edge: both exclusive neighborhoods have size one
  ScalarExpr ring_form = two * cs("c", "beta") * cs("s", "beta") * cs("s", "gamma") *
                         cs("c", "gamma");
  CHECK(equiv_numeric(qaoa1_closed_form(ring(8), {3, 4}), ring_form));
  CHECK(edge_neighborhoods(ring(8), {3, 4}) == std::array<int, 3>{1, 1, 0});

  // isolated edge
  ScalarExpr k2_form = two * cs("c", "beta") * cs("s", "beta") * cs("s", "gamma");
  CHECK(equiv_numeric(qaoa1_closed_form(make_graph(2, {{0, 1}}), {0, 1}), k2_form));

  // triangle edge
  ProblemGraph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  ScalarExpr tri_form = two * cs("c", "beta") * cs("s", "beta") * cs("s", "gamma") *
                            cs("c", "gamma") +
                        cs("s", "beta") * cs("s", "beta") * cs("s", "gamma") * cs("s", "gamma");
  CHECK(equiv_numeric(qaoa1_closed_form(tri, {0, 1}), tri_form));
  CHECK(edge_neighborhoods(tri, {0, 1}) == std::array<int, 3>{0, 0, 1});

  // the example graph's middle edge
  CHECK(edge_neighborhoods(example4(), {1, 2}) == std::array<int, 3>{1, 0, 1});

  // closed form against the statevector oracle
  std::mt19937_64 rng(41);
  for (const auto& g : {ring(6), tri, example4()}) {
    for (auto e : g.edges) {
      ScalarExpr form = qaoa1_closed_form(g, e);
      for (int t = 0; t < 4; ++t) {
        Binding b = oracle::random_binding({"gamma", "beta"}, rng);
        double sym = form.eval(b).real();
        double ref = oracle::statevector_z_expectation(g, Qaoa{1}, {e.first, e.second}, b);
        CHECK(sym == Approx(ref).margin(1e-9));
      }
    }
  }
}

TEST_CASE("parity identity examples", "[ansatz]") {
  CHECK(hweff_parity_identity({0, 0, 0, 0, 0, 0, 0, 0}) == 1);
  CHECK(hweff_parity_identity({1, 0, 0, 0, 0, 0, 0, 0}) == 0);
  CHECK(hweff_parity_identity({0, 0, 0, 1, 0, 1, 0, 0}) == 0); // m2 = r1 = 1
  // a surviving negative branch: m3 = r3 = 1
  CHECK(hweff_parity_identity({0, 0, 0, 0, 1, 0, 0, 1}) == -1);
}

TEST_CASE("parity identity equals the contracted Clifford core (sample)", "[ansatz]") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> mask_dist(0, 255);
  for (int t = 0; t < 40; ++t) {
    int mask = mask_dist(rng);
    std::array<int, 8> bits{};
    for (int i = 0; i < 8; ++i) bits[i] = (mask >> (7 - i)) & 1;
    ScalarExpr value = exact_contract(hweff_core_diagram(bits));
    CHECK(value == ScalarExpr::integer(hweff_parity_identity(bits)));
  }
}

TEST_CASE("hardware-efficient ZZ expectation", "[ansatz]") {
  ScalarExpr expr = hweff_zz_expectation();
  ProblemGraph g = path3();
  auto params = ansatz_parameters(g, HwEffSu2{});
  std::set<std::string> pset(params.begin(), params.end());
  // the cancelled parameters do not appear at all
  auto used = expr.parameters();
  CHECK(used.count("gamma_12") == 0);
  CHECK(used.count("gamma_22") == 0);
  CHECK(used.count("gamma_32") == 0);
  CHECK(used.count("beta_12") == 0);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) {
    Binding b = oracle::random_binding(pset, rng);
    double sym = expr.eval(b).real();
    double ref = oracle::statevector_z_expectation(g, HwEffSu2{}, {1, 2}, b);
    CHECK(sym == Approx(ref).margin(1e-9));
    CHECK(std::abs(expr.eval(b).imag()) < 1e-9);
  }
}
