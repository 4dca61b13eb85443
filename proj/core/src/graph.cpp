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

#include "zxeval/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace zxeval {

bool ProblemGraph::has_edge(int u, int v) const {
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

std::vector<int> ProblemGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProblemGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) raise(Errc::malformed_input, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u == v) raise(Errc::malformed_input, "self-loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      raise(Errc::malformed_input, "edge endpoint out of range");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      raise(Errc::malformed_input,
            "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  return ProblemGraph{n, std::move(edges)};
}

ProblemGraph parse_graph(std::istream& in) {
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) raise(Errc::malformed_input, "empty graph file");
  std::istringstream head(line);
  int n = 0;
  std::size_t m = 0;
  if (!(head >> n >> m)) raise(Errc::malformed_input, "expected header line 'n m'");
  std::vector<std::pair<int, int>> edges;
  while (edges.size() < m) {
    if (!next_line(line)) raise(Errc::malformed_input, "fewer edges than declared");
    std::istringstream es(line);
    int u = 0, v = 0;
    if (!(es >> u >> v)) raise(Errc::malformed_input, "expected edge line 'u v'");
    edges.emplace_back(u, v);
  }
  return make_graph(n, std::move(edges));
}

ProblemGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

ProblemGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::malformed_input, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::pair<ScalarExpr, std::vector<ObservableTerm>> maxcut_hamiltonian(const ProblemGraph& g) {
  ScalarExpr constant =
      ScalarExpr::constant(GaussianRational(Rational(static_cast<long long>(g.edges.size()), 2)));
  std::vector<ObservableTerm> terms;
  for (auto [u, v] : g.edges) {
    ObservableTerm t;
    t.weight = ScalarExpr::constant(GaussianRational(Rational(-1, 2)));
    t.z_support = {std::min(u, v), std::max(u, v)};
    terms.push_back(std::move(t));
  }
  return {std::move(constant), std::move(terms)};
}

LightconeResult lightcone_reduce(const ProblemGraph& g, std::pair<int, int> edge, int p) {
  auto [u, v] = edge;
  if (!g.has_edge(u, v)) raise(Errc::edge_not_in_graph, "edge not in graph");
  if (p < 0) raise(Errc::malformed_input, "negative layer count");
  // BFS distances from {u, v}
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue{u, v};
  dist[u] = dist[v] = 0;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int x : g.neighbors(w)) {
      if (dist[x] < 0) {
        dist[x] = dist[w] + 1;
        queue.push_back(x);
      }
    }
  }
  LightconeResult out;
  std::vector<int> to_new(g.n, -1);
  for (int w = 0; w < g.n; ++w) {
    if (dist[w] >= 0 && dist[w] <= p) {
      to_new[w] = static_cast<int>(out.retained.size());
      out.retained.push_back(w);
    }
  }
  std::vector<std::pair<int, int>> kept;
  for (auto [a, b] : g.edges) {
    if (to_new[a] < 0 || to_new[b] < 0) continue;
    // keep only the couplings reaching into the cone interior
    if (std::min(dist[a], dist[b]) <= p - 1) kept.emplace_back(to_new[a], to_new[b]);
  }
  out.reduced = make_graph(static_cast<int>(out.retained.size()), std::move(kept));
  out.edge = {to_new[u], to_new[v]};
  return out;
}

} // namespace zxeval
