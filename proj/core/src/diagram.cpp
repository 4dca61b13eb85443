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

#include "zxeval/diagram.hpp"

#include <algorithm>
#include <deque>

namespace zxeval {

const Vertex& Diagram::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) raise(Errc::dangling_wire, "unknown vertex id " + std::to_string(v));
  return it->second;
}

std::size_t Diagram::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.a == v) ++d;
    if (e.b == v) ++d;
  }
  return d;
}

std::vector<VertexId> Diagram::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  return out;
}

std::vector<std::size_t> Diagram::incident_edges(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].a == v) out.push_back(i);
    if (edges_[i].b == v) out.push_back(i);
  }
  return out;
}

std::size_t Diagram::edge_multiplicity(VertexId u, VertexId v) const {
  Edge probe(u, v);
  std::size_t n = 0;
  for (const auto& e : edges_)
    if (e == probe) ++n;
  return n;
}

VertexId Diagram::add_vertex(VertexKind kind, LinearPhase phase) {
  VertexId id = next_id_++;
  if (is_boundary(kind) && !phase.is_zero())
    raise(Errc::boundary_degree_violation, "boundary vertices carry no phase");
  vertices_.emplace(id, Vertex{kind, std::move(phase)});
  return id;
}

void Diagram::add_vertex_with_id(VertexId id, VertexKind kind, LinearPhase phase) {
  if (contains(id)) raise(Errc::schema_violation, "duplicate vertex id " + std::to_string(id));
  if (is_boundary(kind) && !phase.is_zero())
    raise(Errc::boundary_degree_violation, "boundary vertices carry no phase");
  vertices_.emplace(id, Vertex{kind, std::move(phase)});
  next_id_ = std::max(next_id_, id + 1);
}

void Diagram::add_edge(VertexId u, VertexId v) {
  if (!contains(u) || !contains(v))
    raise(Errc::dangling_wire, "edge endpoint does not exist");
  edges_.emplace_back(u, v);
}

void Diagram::remove_vertex(VertexId v) {
  vertices_.erase(v);
  edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                              [v](const Edge& e) { return e.a == v || e.b == v; }),
               edges_.end());
  inputs_.erase(std::remove(inputs_.begin(), inputs_.end(), v), inputs_.end());
  outputs_.erase(std::remove(outputs_.begin(), outputs_.end(), v), outputs_.end());
}

void Diagram::remove_edge(std::size_t edge_index) {
  edges_.erase(edges_.begin() + static_cast<long>(edge_index));
}

void Diagram::remove_one_edge(VertexId u, VertexId v) {
  Edge probe(u, v);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == probe) {
      remove_edge(i);
      return;
    }
  }
  raise(Errc::dangling_wire, "no such edge to remove");
}

void Diagram::set_phase(VertexId v, LinearPhase phase) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) raise(Errc::dangling_wire, "unknown vertex");
  it->second.phase = std::move(phase);
}

void Diagram::add_phase(VertexId v, const LinearPhase& phase) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) raise(Errc::dangling_wire, "unknown vertex");
  it->second.phase = it->second.phase + phase;
}

void Diagram::set_boundaries(std::vector<VertexId> inputs, std::vector<VertexId> outputs) {
  inputs_ = std::move(inputs);
  outputs_ = std::move(outputs);
}

void Diagram::validate() const {
  for (const auto& e : edges_) {
    if (!contains(e.a) || !contains(e.b)) raise(Errc::dangling_wire, "edge endpoint missing");
    if (is_boundary(vertex(e.a).kind) && is_boundary(vertex(e.b).kind))
      raise(Errc::boundary_degree_violation, "edge joins two boundary vertices");
  }
  std::set<VertexId> seen;
  for (VertexId v : inputs_) {
    if (!contains(v) || vertex(v).kind != VertexKind::In)
      raise(Errc::boundary_degree_violation, "input list entry is not an In vertex");
    if (!seen.insert(v).second) raise(Errc::boundary_degree_violation, "duplicate boundary");
  }
  for (VertexId v : outputs_) {
    if (!contains(v) || vertex(v).kind != VertexKind::Out)
      raise(Errc::boundary_degree_violation, "output list entry is not an Out vertex");
    if (!seen.insert(v).second) raise(Errc::boundary_degree_violation, "duplicate boundary");
  }
  for (const auto& [id, v] : vertices_) {
    if (is_boundary(v.kind)) {
      if (degree(id) != 1)
        raise(Errc::boundary_degree_violation,
              "boundary vertex " + std::to_string(id) + " must have degree 1");
      if (seen.count(id) == 0)
        raise(Errc::boundary_degree_violation, "boundary vertex not listed as input or output");
    }
  }
}

std::set<std::string> Diagram::parameters() const {
  std::set<std::string> out = scalar_.parameters();
  for (const auto& [id, v] : vertices_) {
    auto p = v.phase.parameters();
    out.insert(p.begin(), p.end());
  }
  return out;
}

Diagram Diagram::renumbered() const {
  // Deterministic relabeling: breadth-first from the boundaries in order,
  // neighbors visited in ascending current-id order, then any unreached
  // component from its smallest id.
  std::map<VertexId, VertexId> remap;
  std::deque<VertexId> queue;
  auto push = [&](VertexId v) {
    if (remap.count(v) == 0) {
      VertexId fresh = static_cast<VertexId>(remap.size());
      remap[v] = fresh;
      queue.push_back(v);
    }
  };
  for (VertexId v : inputs_) push(v);
  for (VertexId v : outputs_) push(v);
  auto drain = [&] {
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      auto ns = neighbors(v);
      std::sort(ns.begin(), ns.end());
      for (VertexId w : ns) push(w);
    }
  };
  drain();
  for (const auto& [id, v] : vertices_) {
    if (remap.count(id) == 0) {
      push(id);
      drain();
    }
  }
  Diagram out;
  out.scalar_ = scalar_;
  out.next_id_ = static_cast<VertexId>(vertices_.size());
  for (const auto& [id, v] : vertices_) out.vertices_.emplace(remap.at(id), v);
  for (const auto& e : edges_) out.edges_.emplace_back(remap.at(e.a), remap.at(e.b));
  std::sort(out.edges_.begin(), out.edges_.end());
  for (VertexId v : inputs_) out.inputs_.push_back(remap.at(v));
  for (VertexId v : outputs_) out.outputs_.push_back(remap.at(v));
  return out;
}

bool operator==(const Diagram& a, const Diagram& b) {
  auto key = [](const Diagram& d) {
    std::vector<Edge> es = d.edges_;
    std::sort(es.begin(), es.end());
    return std::tuple(d.vertices_.size(), es, d.inputs_, d.outputs_);
  };
  if (a.vertices_.size() != b.vertices_.size()) return false;
  for (auto ita = a.vertices_.begin(), itb = b.vertices_.begin(); ita != a.vertices_.end();
       ++ita, ++itb) {
    if (ita->first != itb->first || ita->second.kind != itb->second.kind ||
        ita->second.phase != itb->second.phase)
      return false;
  }
  return key(a) == key(b) && a.scalar_ == b.scalar_;
}

// ---------------------------------------------------------------------------
// builder

void DiagramBuilder::wire(VertexId u, VertexId v) {
  if (!d_.contains(u) || !d_.contains(v)) raise(Errc::dangling_wire, "wire endpoint not declared");
  if (is_boundary(d_.vertex(u).kind) && is_boundary(d_.vertex(v).kind)) {
    VertexId mid = d_.add_vertex(VertexKind::Z);
    d_.add_edge(u, mid);
    d_.add_edge(mid, v);
    return;
  }
  d_.add_edge(u, v);
}

Diagram DiagramBuilder::build() {
  std::vector<VertexId> ins, outs;
  for (const auto& [id, v] : d_.vertices()) {
    if (v.kind == VertexKind::In) ins.push_back(id);
    if (v.kind == VertexKind::Out) outs.push_back(id);
  }
  return build(std::move(ins), std::move(outs));
}

Diagram DiagramBuilder::build(std::vector<VertexId> inputs, std::vector<VertexId> outputs) {
  d_.set_boundaries(std::move(inputs), std::move(outputs));
  d_.validate();
  return d_;
}

// ---------------------------------------------------------------------------
// composition

namespace {

/// Copies src into dst, returning the id remap.
std::map<VertexId, VertexId> absorb(Diagram& dst, const Diagram& src) {
  std::map<VertexId, VertexId> remap;
  for (const auto& [id, v] : src.vertices()) remap[id] = dst.add_vertex(v.kind, v.phase);
  for (const auto& e : src.edges()) dst.add_edge(remap.at(e.a), remap.at(e.b));
  dst.multiply_scalar(src.scalar());
  return remap;
}

} // namespace

Diagram compose(const Diagram& a, const Diagram& b) {
  if (a.outputs().size() != b.inputs().size())
    raise(Errc::arity_mismatch, "compose: " + std::to_string(a.outputs().size()) +
                                    " outputs vs " + std::to_string(b.inputs().size()) +
                                    " inputs");
  Diagram out;
  out.set_scalar(ScalarExpr::one());
  auto ra = absorb(out, a);
  auto rb = absorb(out, b);
  for (std::size_t k = 0; k < a.outputs().size(); ++k) {
    VertexId oa = ra.at(a.outputs()[k]);
    VertexId ib = rb.at(b.inputs()[k]);
    // each boundary has exactly one (internal) neighbor
    VertexId na = out.neighbors(oa).at(0);
    VertexId nb = out.neighbors(ib).at(0);
    out.remove_vertex(oa);
    out.remove_vertex(ib);
    out.add_edge(na, nb);
  }
  std::vector<VertexId> ins, outs;
  for (VertexId v : a.inputs()) ins.push_back(ra.at(v));
  for (VertexId v : b.outputs()) outs.push_back(rb.at(v));
  out.set_boundaries(std::move(ins), std::move(outs));
  Diagram result = out.renumbered();
  result.validate();
  return result;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram out;
  out.set_scalar(ScalarExpr::one());
  auto ra = absorb(out, a);
  auto rb = absorb(out, b);
  std::vector<VertexId> ins, outs;
  for (VertexId v : a.inputs()) ins.push_back(ra.at(v));
  for (VertexId v : b.inputs()) ins.push_back(rb.at(v));
  for (VertexId v : a.outputs()) outs.push_back(ra.at(v));
  for (VertexId v : b.outputs()) outs.push_back(rb.at(v));
  out.set_boundaries(std::move(ins), std::move(outs));
  Diagram result = out.renumbered();
  result.validate();
  return result;
}

Diagram adjoint(const Diagram& d) {
  Diagram out;
  out.set_scalar(d.scalar().conj());
  std::map<VertexId, VertexId> remap;
  for (const auto& [id, v] : d.vertices()) {
    VertexKind kind = v.kind;
    if (kind == VertexKind::In) kind = VertexKind::Out;
    else if (kind == VertexKind::Out) kind = VertexKind::In;
    remap[id] = out.add_vertex(kind, v.phase.negated());
  }
  for (const auto& e : d.edges()) out.add_edge(remap.at(e.a), remap.at(e.b));
  std::vector<VertexId> ins, outs;
  for (VertexId v : d.outputs()) ins.push_back(remap.at(v));
  for (VertexId v : d.inputs()) outs.push_back(remap.at(v));
  out.set_boundaries(std::move(ins), std::move(outs));
  Diagram result = out.renumbered();
  result.validate();
  return result;
}

Diagram identity_diagram(int n_wires) {
  DiagramBuilder b;
  std::vector<VertexId> ins, outs;
  for (int q = 0; q < n_wires; ++q) {
    VertexId i = b.input();
    VertexId o = b.output();
    b.wire(i, o);
    ins.push_back(i);
    outs.push_back(o);
  }
  return b.build(std::move(ins), std::move(outs));
}

} // namespace zxeval
