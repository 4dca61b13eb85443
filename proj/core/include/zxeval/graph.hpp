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

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zxeval/scalar_expr.hpp"

namespace zxeval {

/// Undirected MaxCut instance: 0-indexed vertices, no self-loops, no
/// duplicate edges.
struct ProblemGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
};

/// Validates the invariants above; throws malformed_input.
ProblemGraph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Text format: first line "n m", then m lines "u v" (0-indexed); '#' starts
/// a comment. Duplicate edges are rejected.
ProblemGraph parse_graph(std::istream& in);
ProblemGraph parse_graph_string(const std::string& text);
ProblemGraph load_graph_file(const std::string& path);

/// One Pauli-Z product term of an observable.
struct ObservableTerm {
  ScalarExpr weight;
  std::vector<int> z_support; // distinct, ascending
};

/// C = |E|/2 - 1/2 sum_{(u,v) in E} Z_u Z_v, as (constant, per-edge terms).
std::pair<ScalarExpr, std::vector<ObservableTerm>> maxcut_hamiltonian(const ProblemGraph& g);

struct LightconeResult {
  ProblemGraph reduced;
  std::vector<int> retained;     // new index -> old vertex, ascending
  std::pair<int, int> edge;      // the observable edge in new indices
};

/// Restricts the instance to the distance-(<= p) cone of {u, v}, keeping the
/// edges with at least one endpoint at distance <= p-1 (the gadgets that
/// couple into the cone). The Z_u Z_v expectation of a depth-p layered state
/// on the reduced instance equals the one on the full instance.
LightconeResult lightcone_reduce(const ProblemGraph& g, std::pair<int, int> edge, int p);

} // namespace zxeval
