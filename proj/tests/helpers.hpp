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

#include <random>

#include "zxeval/diagram.hpp"
#include "zxeval/oracle.hpp"

namespace zxeval::test {

/// 1-wire diagram with a single spider of the given color and phase.
inline Diagram spider_wire(VertexKind kind, LinearPhase phase = {}) {
  DiagramBuilder b;
  VertexId in = b.input();
  VertexId s = kind == VertexKind::Z ? b.z(std::move(phase)) : b.x(std::move(phase));
  VertexId out = b.output();
  b.wire(in, s);
  b.wire(s, out);
  return b.build({in}, {out});
}

/// k-wire phase gadget (hub phase t), each leg a degree-3 spider on its wire.
inline Diagram gadget_diagram(int k, LinearPhase hub_phase, ScalarExpr scalar = ScalarExpr::one()) {
  DiagramBuilder b;
  std::vector<VertexId> ins, outs;
  VertexId hub = b.x();
  VertexId ph = b.z(std::move(hub_phase));
  b.wire(hub, ph);
  for (int q = 0; q < k; ++q) {
    VertexId in = b.input();
    VertexId leg = b.z();
    VertexId out = b.output();
    b.wire(in, leg);
    b.wire(leg, out);
    b.wire(leg, hub);
    ins.push_back(in);
    outs.push_back(out);
  }
  b.scalar(scalar);
  return b.build(std::move(ins), std::move(outs));
}

/// Uniformly random small diagram: spiders with phases from (pi/2)Z (or a
/// parameter when requested), random wiring, boundaries of the given arity.
inline Diagram random_diagram(std::mt19937_64& rng, int n_in, int n_out, int n_spiders,
                              int extra_edges, bool parameterized = false) {
  DiagramBuilder b;
  std::vector<VertexId> spiders;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> quarter(0, 3);
  for (int i = 0; i < n_spiders; ++i) {
    LinearPhase phase = LinearPhase::pi_multiple(Rational(quarter(rng), 2));
    if (parameterized && coin(rng))
      phase = phase + LinearPhase::parameter(coin(rng) ? "a" : "b", Rational(coin(rng) ? 1 : -2));
    spiders.push_back(coin(rng) ? b.z(phase) : b.x(phase));
  }
  std::uniform_int_distribution<int> pick(0, n_spiders - 1);
  std::vector<VertexId> ins, outs;
  for (int i = 0; i < n_in; ++i) {
    VertexId in = b.input();
    b.wire(in, spiders[static_cast<std::size_t>(pick(rng))]);
    ins.push_back(in);
  }
  for (int i = 0; i < n_out; ++i) {
    VertexId out = b.output();
    b.wire(out, spiders[static_cast<std::size_t>(pick(rng))]);
    outs.push_back(out);
  }
  // a spanning chain keeps most of the diagram connected
  for (int i = 1; i < n_spiders; ++i)
    b.wire(spiders[static_cast<std::size_t>(i - 1)], spiders[static_cast<std::size_t>(i)]);
  for (int i = 0; i < extra_edges; ++i)
    b.wire(spiders[static_cast<std::size_t>(pick(rng))],
           spiders[static_cast<std::size_t>(pick(rng))]);
  return b.build(std::move(ins), std::move(outs));
}

inline double max_abs_diff(const oracle::ComplexMatrix& a, const oracle::ComplexMatrix& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

} // namespace zxeval::test
