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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zxeval/scalar_expr.hpp"

namespace zxeval {

using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { Z, X, In, Out };

inline bool is_boundary(VertexKind k) { return k == VertexKind::In || k == VertexKind::Out; }
inline bool is_spider(VertexKind k) { return k == VertexKind::Z || k == VertexKind::X; }

struct Vertex {
  VertexKind kind;
  LinearPhase phase; // boundaries carry no phase (kept zero)
};

/// Unordered edge; endpoints stored with first <= second. Self-loops allowed.
struct Edge {
  VertexId a;
  VertexId b;

  Edge(VertexId u, VertexId v) : a(std::min(u, v)), b(std::max(u, v)) {}
  friend bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Edge& x, const Edge& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

/// Open ZX multigraph with an explicit global ScalarExpr factor.
///
/// Invariants: every input/output id exists, is a boundary vertex of degree
/// exactly one, inputs and outputs are disjoint, edge endpoints exist, and no
/// edge joins two boundary vertices (bare wires are represented through a
/// phase-free degree-2 Z spider).
///
/// Diagrams are plain values: every transformation copies first, so sharing a
/// diagram across threads is safe.
class Diagram {
public:
  Diagram() = default;

  const std::map<VertexId, Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  const ScalarExpr& scalar() const { return scalar_; }

  bool contains(VertexId v) const { return vertices_.count(v) != 0; }
  const Vertex& vertex(VertexId v) const;
  std::size_t degree(VertexId v) const;
  /// Neighbor list with multiplicity; a self-loop contributes the vertex twice.
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Indices into edges() incident to v; self-loops appear twice.
  std::vector<std::size_t> incident_edges(VertexId v) const;
  std::size_t edge_multiplicity(VertexId u, VertexId v) const;
  bool is_closed() const { return inputs_.empty() && outputs_.empty(); }

  // Mutators used by builders and the rewrite engine. Diagrams have value
  // semantics; rewrite entry points copy before mutating.
  VertexId add_vertex(VertexKind kind, LinearPhase phase = {});
  /// Inserts a vertex under a caller-chosen id (deserialization); the id must
  /// be fresh.
  void add_vertex_with_id(VertexId id, VertexKind kind, LinearPhase phase = {});
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v); // drops incident edges
  void remove_edge(std::size_t edge_index);
  void remove_one_edge(VertexId u, VertexId v);
  void set_phase(VertexId v, LinearPhase phase);
  void add_phase(VertexId v, const LinearPhase& phase);
  void set_scalar(ScalarExpr s) { scalar_ = std::move(s); }
  /// Keeps the scalar simplified so that conjugate phase factors picked up by
  /// rewrites cancel structurally, not just numerically.
  void multiply_scalar(const ScalarExpr& s) { scalar_ = simplify(scalar_ * s); }
  void set_boundaries(std::vector<VertexId> inputs, std::vector<VertexId> outputs);

  /// Validates all structural invariants; throws on violation.
  void validate() const;

  std::set<std::string> parameters() const;

  /// Renumbers vertices to 0..n-1 in a traversal order that depends only on
  /// the diagram's structure as built (used for stable serialization and for
  /// structural comparison of independently built terms).
  Diagram renumbered() const;

  friend bool operator==(const Diagram& a, const Diagram& b);

private:
  std::map<VertexId, Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  ScalarExpr scalar_ = ScalarExpr::one();
  VertexId next_id_ = 0;
};

/// Incremental construction with validation; wires between two declared
/// boundaries are normalized through an inserted Z(0) spider.
class DiagramBuilder {
public:
  VertexId z(LinearPhase phase = {}) { return d_.add_vertex(VertexKind::Z, std::move(phase)); }
  VertexId x(LinearPhase phase = {}) { return d_.add_vertex(VertexKind::X, std::move(phase)); }
  VertexId input() { return d_.add_vertex(VertexKind::In); }
  VertexId output() { return d_.add_vertex(VertexKind::Out); }
  void wire(VertexId u, VertexId v);
  void scalar(const ScalarExpr& s) { d_.multiply_scalar(s); }

  /// Finalizes the diagram. Boundary order: inputs/outputs in declaration
  /// order unless explicitly overridden.
  Diagram build();
  Diagram build(std::vector<VertexId> inputs, std::vector<VertexId> outputs);

private:
  Diagram d_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
};

/// Sequential composition: the outputs of `a` are fused with the inputs of
/// `b`; the result computes b after a (matrix product semantics).
Diagram compose(const Diagram& a, const Diagram& b);

/// Parallel composition (tensor product); boundary lists of `a` come first.
Diagram tensor(const Diagram& a, const Diagram& b);

/// Conjugate transpose: inputs and outputs swap, phases negate, the scalar is
/// conjugated.
Diagram adjoint(const Diagram& d);

/// n-wire identity diagram (each wire through a Z(0) spider).
Diagram identity_diagram(int n_wires);

} // namespace zxeval
