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

#include "helpers.hpp"
#include "zxeval/ansatz.hpp"
#include "zxeval/evaluator.hpp"
#include "zxeval/oracle.hpp"

using namespace zxeval;

namespace {
ProblemGraph ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(edges));
}

ScalarExpr zz_via_evaluator(const ProblemGraph& g, const AnsatzSpec& ansatz,
                            std::pair<int, int> edge, const Strategy& strategy = {}) {
  Diagram state = build_state(g, ansatz);
  ObservableTerm term;
  term.weight = ScalarExpr::one();
  term.z_support = {std::min(edge.first, edge.second), std::max(edge.first, edge.second)};
  return evaluate_expectation(expectation_diagram(state, term), strategy);
}
} // namespace

TEST_CASE("exact contraction basics", "[evaluator]") {
  // a zero-legged Z(pi) spider: 1 + e^{i pi} = 0
  DiagramBuilder b1;
  b1.z(LinearPhase::pi());
  CHECK(exact_contract(b1.build({}, {})) == ScalarExpr::zero());

  // a zero-legged Z(0) spider: 2
  DiagramBuilder b2;
  b2.z();
  CHECK(exact_contract(b2.build({}, {})) == ScalarExpr::integer(2));

  // Z(0) and X(0) joined by two parallel edges: 2
  DiagramBuilder b3;
  VertexId z = b3.z();
  VertexId x = b3.x();
  b3.wire(z, x);
  b3.wire(z, x);
  CHECK(exact_contract(b3.build({}, {})) == ScalarExpr::integer(2));

  // a self-loop on a Z spider needs no special casing
  DiagramBuilder b4;
  VertexId s = b4.z(LinearPhase::pi());
  b4.wire(s, s);
  CHECK(exact_contract(b4.build({}, {})) == ScalarExpr::zero());

  CHECK_THROWS_MATCHES(exact_contract(identity_diagram(1)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::not_closed; }));

  DiagramBuilder b5;
  b5.z(LinearPhase::pi_multiple(Rational(1, 4)));
  CHECK_THROWS_MATCHES(exact_contract(b5.build({}, {})), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::unsupported_phase; }));

  DiagramBuilder b6;
  b6.z(LinearPhase::parameter("t"));
  CHECK_THROWS_MATCHES(exact_contract(b6.build({}, {})), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::unsupported_phase; }));
}

TEST_CASE("exact contraction agrees with numeric contraction", "[evaluator]") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 120; ++t) {
    Diagram d = test::random_diagram(rng, 0, 0, 6, 5);
    ScalarExpr exact = exact_contract(d);
    auto numeric = oracle::contract_numeric_closed(d, {});
    CHECK(std::abs(exact.eval({}) - numeric) < 1e-12);
  }
}

TEST_CASE("golden expectations through the full pipeline", "[evaluator]") {
  ScalarExpr cb = ScalarExpr::cos(LinearPhase::parameter("beta"));
  ScalarExpr sb = ScalarExpr::sin(LinearPhase::parameter("beta"));
  ScalarExpr cg = ScalarExpr::cos(LinearPhase::parameter("gamma"));
  ScalarExpr sg = ScalarExpr::sin(LinearPhase::parameter("gamma"));

  // product rotations: <Z0 Z1> = cos(alpha_0) cos(alpha_1)
  ProblemGraph k2 = make_graph(2, {{0, 1}});
  ScalarExpr ry = zz_via_evaluator(k2, RyProduct{}, {0, 1});
  CHECK(equiv_numeric(ry, ScalarExpr::cos(LinearPhase::parameter("alpha_0")) *
                              ScalarExpr::cos(LinearPhase::parameter("alpha_1"))));

  // isolated edge at depth 1: 2 cb sb sg
  ScalarExpr k2zz = zz_via_evaluator(k2, Qaoa{1}, {0, 1});
  CHECK(equiv_numeric(k2zz, ScalarExpr::integer(2) * cb * sb * sg));

  // ring edge via the reduced instance: 2 cb sb sg cg
  LightconeResult lc = lightcone_reduce(ring(8), {0, 1}, 1);
  ScalarExpr ringzz = zz_via_evaluator(lc.reduced, Qaoa{1}, lc.edge);
  CHECK(equiv_numeric(ringzz, ScalarExpr::integer(2) * cb * sb * sg * cg));
}

TEST_CASE("strategies that terminate agree", "[evaluator]") {
  ProblemGraph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  Strategy reordered;
  reordered.rules = {RuleId::fuse,      RuleId::identity,    RuleId::hopf, RuleId::pi,
                     RuleId::copy,      RuleId::bialgebra,   RuleId::gadget_pi,
                     RuleId::gadget_fuse};
  Strategy expand_all;
  expand_all.expand = ExpandPolicy::all;
  ScalarExpr a = zz_via_evaluator(tri, Qaoa{1}, {0, 1});
  ScalarExpr b = zz_via_evaluator(tri, Qaoa{1}, {0, 1}, reordered);
  ScalarExpr c = zz_via_evaluator(tri, Qaoa{1}, {0, 1}, expand_all);
  CHECK(equiv_numeric(a, b));
  CHECK(equiv_numeric(a, c));
  CHECK(equiv_numeric(a, qaoa1_closed_form(tri, {0, 1})));
}

TEST_CASE("term budget is enforced", "[evaluator]") {
  Strategy tiny;
  tiny.term_budget = 2;
  ProblemGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  CHECK_THROWS_MATCHES(zz_via_evaluator(g, Qaoa{1}, {1, 2}, tiny), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::term_budget_exceeded;
                       }));
}

TEST_CASE("the general evaluator also handles the hardware-efficient family", "[evaluator]") {
  ProblemGraph g = make_graph(3, {{1, 2}});
  ScalarExpr via_diagram = zz_via_evaluator(g, HwEffSu2{}, {1, 2});
  ScalarExpr via_identity = hweff_zz_expectation();
  CHECK(equiv_numeric(via_diagram, via_identity, 16, 1e-9));
}
