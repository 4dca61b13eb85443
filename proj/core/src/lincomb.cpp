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

#include "zxeval/lincomb.hpp"

#include <algorithm>
#include <map>

#include "zxeval/evaluator.hpp"
#include "zxeval/json_io.hpp"
#include "zxeval/rewrite.hpp"

namespace zxeval {

LinComb::LinComb(const Diagram& d) : n_inputs_(d.inputs().size()), n_outputs_(d.outputs().size()) {
  terms_.push_back({ScalarExpr::one(), d});
}

void LinComb::add_term(ScalarExpr coeff, Diagram d) {
  if (d.inputs().size() != n_inputs_ || d.outputs().size() != n_outputs_)
    raise(Errc::arity_mismatch, "term arity does not match the combination");
  terms_.push_back({std::move(coeff), std::move(d)});
}

namespace {

/// Shared two-term split of a degree-2 spider:
///   S(t) = e^{it/2} ( cos(t/2) S(0) - i sin(t/2) S(pi) ).
LinComb split_rotation(const Diagram& host, VertexId site) {
  const LinearPhase t = host.vertex(site).phase;
  LinearPhase half = t.scaled(Rational(1, 2));
  LinComb out(host.inputs().size(), host.outputs().size());
  Diagram wire = host;
  wire.set_phase(site, LinearPhase{});
  out.add_term(ScalarExpr::exp_i(half) * ScalarExpr::cos(half), std::move(wire));
  Diagram flip = host;
  flip.set_phase(site, LinearPhase::pi());
  out.add_term(ScalarExpr::exp_i(half) * (-ScalarExpr::unit_i()) * ScalarExpr::sin(half),
               std::move(flip));
  return out;
}

void check_rotation_site(const Diagram& host, VertexId site, VertexKind kind) {
  if (!host.contains(site) || host.vertex(site).kind != kind)
    raise(Errc::not_decomposable, "site is not a spider of the requested color");
  if (host.degree(site) != 2 || host.edge_multiplicity(site, site) > 0)
    raise(Errc::not_decomposable, "rotation site must be a degree-2 spider on a wire");
  if (host.vertex(site).phase.terms().empty())
    raise(Errc::not_decomposable, "phase carries no parameter; decomposition would be useless");
}

} // namespace

LinComb decompose_z_rotation(const Diagram& host, VertexId site) {
  check_rotation_site(host, site, VertexKind::Z);
  return split_rotation(host, site);
}

LinComb decompose_x_rotation(const Diagram& host, VertexId site) {
  check_rotation_site(host, site, VertexKind::X);
  return split_rotation(host, site);
}

LinComb decompose_phase_gadget(const Diagram& host, VertexId hub) {
  auto g = recognize_gadget(host, hub);
  if (!g || !host.vertex(hub).phase.is_zero())
    raise(Errc::not_a_gadget, "site is not a recognized phase gadget");
  const LinearPhase t = host.vertex(g->phase_hub).phase;
  if (t.terms().empty())
    raise(Errc::not_decomposable, "gadget phase carries no parameter");
  const int k = static_cast<int>(g->legs.size());
  LinearPhase half = t.scaled(Rational(1, 2));
  ScalarExpr norm = ScalarExpr::sqrt2_pow(1 - k) * ScalarExpr::exp_i(half);

  LinComb out(host.inputs().size(), host.outputs().size());
  Diagram wires = host;
  wires.remove_vertex(g->phase_hub);
  wires.remove_vertex(g->hub);
  out.add_term(norm * ScalarExpr::cos(half), std::move(wires));
  Diagram flips = host;
  flips.remove_vertex(g->phase_hub);
  flips.remove_vertex(g->hub);
  for (VertexId leg : g->legs) flips.add_phase(leg, LinearPhase::pi());
  out.add_term(norm * (-ScalarExpr::unit_i()) * ScalarExpr::sin(half), std::move(flips));
  return out;
}

LinComb substitute(const Diagram& host, const std::vector<VertexId>& region,
                   const LinComb& replacement) {
  std::set<VertexId> inside(region.begin(), region.end());
  for (VertexId v : region) {
    if (!host.contains(v)) raise(Errc::region_arity_mismatch, "region vertex does not exist");
    if (is_boundary(host.vertex(v).kind))
      raise(Errc::region_arity_mismatch, "region may not contain boundary vertices");
  }
  // cut edges ordered by (outside endpoint, inside endpoint)
  std::vector<std::pair<VertexId, VertexId>> cuts; // (outside, inside)
  for (const auto& e : host.edges()) {
    bool a_in = inside.count(e.a) != 0;
    bool b_in = inside.count(e.b) != 0;
    if (a_in == b_in) continue;
    cuts.emplace_back(a_in ? e.b : e.a, a_in ? e.a : e.b);
  }
  std::sort(cuts.begin(), cuts.end());
  if (cuts.size() != replacement.n_inputs() + replacement.n_outputs())
    raise(Errc::region_arity_mismatch,
          "region boundary has " + std::to_string(cuts.size()) + " wires, replacement expects " +
              std::to_string(replacement.n_inputs() + replacement.n_outputs()));

  LinComb out(host.inputs().size(), host.outputs().size());
  for (const auto& term : replacement.terms()) {
    Diagram d = host;
    for (VertexId v : region) d.remove_vertex(v);
    // splice the term diagram in
    std::map<VertexId, VertexId> remap;
    for (const auto& [id, vert] : term.diagram.vertices())
      remap[id] = d.add_vertex(vert.kind, vert.phase);
    for (const auto& e : term.diagram.edges()) d.add_edge(remap.at(e.a), remap.at(e.b));
    d.multiply_scalar(term.diagram.scalar());
    std::vector<VertexId> slots;
    for (VertexId v : term.diagram.inputs()) slots.push_back(remap.at(v));
    for (VertexId v : term.diagram.outputs()) slots.push_back(remap.at(v));
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      VertexId boundary = slots[k];
      VertexId inner = d.neighbors(boundary).at(0);
      d.remove_vertex(boundary);
      d.add_edge(cuts[k].first, inner);
    }
    out.add_term(term.coeff, d.renumbered());
  }
  return out;
}

LinComb product(const LinComb& a, const LinComb& b) {
  if (a.n_outputs() != b.n_inputs())
    raise(Errc::arity_mismatch, "product arity mismatch: " + std::to_string(a.n_outputs()) +
                                    " outputs vs " + std::to_string(b.n_inputs()) + " inputs");
  LinComb out(a.n_inputs(), b.n_outputs());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      out.add_term(ta.coeff * tb.coeff, compose(ta.diagram, tb.diagram));
  return out;
}

LinComb canonicalize(const LinComb& lc) {
  // hoist term scalars into the coefficients, then merge structurally equal
  // diagrams under the deterministic relabeling
  std::vector<std::string> order;
  std::map<std::string, std::pair<ScalarExpr, Diagram>> merged;
  for (const auto& term : lc.terms()) {
    Diagram d = term.diagram.renumbered();
    ScalarExpr coeff = term.coeff * d.scalar();
    d.set_scalar(ScalarExpr::one());
    if (coeff.is_zero()) continue;
    std::string key = to_json(d).dump();
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::pair{coeff, std::move(d)});
      order.push_back(std::move(key));
    } else {
      it->second.first += coeff;
    }
  }
  LinComb out(lc.n_inputs(), lc.n_outputs());
  for (const auto& key : order) {
    auto& [coeff, d] = merged.at(key);
    if (coeff.is_zero()) continue;
    out.add_term(coeff, d);
  }
  return out;
}

ScalarExpr collapse_closed(const LinComb& lc) {
  if (lc.n_inputs() != 0 || lc.n_outputs() != 0)
    raise(Errc::not_closed, "collapse requires arity (0,0)");
  ScalarExpr total = ScalarExpr::zero();
  for (const auto& term : lc.terms()) total += term.coeff * exact_contract(term.diagram);
  return simplify(total);
}

} // namespace zxeval
