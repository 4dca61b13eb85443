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

#include "zxeval/rewrite.hpp"

#include <algorithm>
#include <array>

namespace zxeval {

std::string rule_name(RuleId r) {
  switch (r) {
  case RuleId::fuse: return "f";
  case RuleId::identity: return "id";
  case RuleId::pi: return "pi";
  case RuleId::copy: return "c";
  case RuleId::bialgebra: return "b";
  case RuleId::hopf: return "h";
  case RuleId::gadget_fuse: return "gf";
  case RuleId::gadget_pi: return "gpi";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  static const std::array<RuleId, 8> all = {RuleId::fuse,      RuleId::identity, RuleId::pi,
                                            RuleId::copy,      RuleId::bialgebra, RuleId::hopf,
                                            RuleId::gadget_fuse, RuleId::gadget_pi};
  for (RuleId r : all)
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

std::vector<RuleId> default_rule_order() {
  return {RuleId::identity, RuleId::fuse,        RuleId::pi,       RuleId::copy,
          RuleId::hopf,     RuleId::bialgebra,   RuleId::gadget_fuse, RuleId::gadget_pi};
}

namespace {

bool is_zero_phase(const LinearPhase& p) { return p.is_zero(); }
bool is_pi_phase(const LinearPhase& p) { return p.is_pi(); }
bool is_basis_phase(const LinearPhase& p) { return p.is_zero() || p.is_pi(); }

bool has_self_loop(const Diagram& d, VertexId v) { return d.edge_multiplicity(v, v) > 0; }

VertexKind other_color(VertexKind k) { return k == VertexKind::Z ? VertexKind::X : VertexKind::Z; }

// ---------------------------------------------------------------------------
// pattern predicates (shared by match enumeration and revalidation)

bool match_fuse(const Diagram& d, VertexId u, VertexId v) {
  if (u == v || !d.contains(u) || !d.contains(v)) return false;
  const Vertex& vu = d.vertex(u);
  const Vertex& vv = d.vertex(v);
  return is_spider(vu.kind) && vu.kind == vv.kind && d.edge_multiplicity(u, v) > 0;
}

bool match_identity(const Diagram& d, VertexId v) {
  if (!d.contains(v)) return false;
  const Vertex& vv = d.vertex(v);
  if (!is_spider(vv.kind) || !is_zero_phase(vv.phase)) return false;
  if (d.degree(v) != 2 || has_self_loop(d, v)) return false;
  auto ns = d.neighbors(v);
  // removing the spider must not create a boundary-boundary edge
  return !(is_boundary(d.vertex(ns[0]).kind) && is_boundary(d.vertex(ns[1]).kind));
}

bool match_pi(const Diagram& d, VertexId pusher, VertexId target) {
  if (!d.contains(pusher) || !d.contains(target) || pusher == target) return false;
  const Vertex& p = d.vertex(pusher);
  const Vertex& t = d.vertex(target);
  if (!is_spider(p.kind) || !is_spider(t.kind) || p.kind == t.kind) return false;
  if (!is_pi_phase(p.phase)) return false;
  if (d.degree(pusher) != 2 || has_self_loop(d, pusher)) return false;
  if (has_self_loop(d, target)) return false;
  return d.edge_multiplicity(pusher, target) == 1;
}

bool match_copy(const Diagram& d, VertexId state, VertexId through) {
  if (!d.contains(state) || !d.contains(through) || state == through) return false;
  const Vertex& s = d.vertex(state);
  const Vertex& t = d.vertex(through);
  if (!is_spider(s.kind) || !is_spider(t.kind) || s.kind == t.kind) return false;
  if (!is_basis_phase(s.phase) || d.degree(state) != 1) return false;
  if (has_self_loop(d, through)) return false;
  return d.edge_multiplicity(state, through) == 1;
}

bool match_bialgebra(const Diagram& d, VertexId z1, VertexId z2, VertexId x1, VertexId x2) {
  std::array<VertexId, 4> vs{z1, z2, x1, x2};
  for (VertexId v : vs)
    if (!d.contains(v)) return false;
  if (z1 == z2 || x1 == x2) return false;
  for (VertexId z : {z1, z2}) {
    const Vertex& v = d.vertex(z);
    if (v.kind != VertexKind::Z || !is_zero_phase(v.phase) || d.degree(z) != 3) return false;
  }
  for (VertexId x : {x1, x2}) {
    const Vertex& v = d.vertex(x);
    if (v.kind != VertexKind::X || !is_zero_phase(v.phase) || d.degree(x) != 3) return false;
  }
  for (VertexId z : {z1, z2})
    for (VertexId x : {x1, x2})
      if (d.edge_multiplicity(z, x) != 1) return false;
  if (d.edge_multiplicity(z1, z2) != 0 || d.edge_multiplicity(x1, x2) != 0) return false;
  // the four external edges must leave the matched set
  for (VertexId v : vs)
    for (VertexId n : d.neighbors(v)) {
      bool inside = std::find(vs.begin(), vs.end(), n) != vs.end();
      bool cross = (d.vertex(v).kind != d.vertex(n).kind) && inside;
      if (inside && !cross) return false;
    }
  for (VertexId z : {z1, z2}) {
    std::size_t external = 0;
    for (VertexId n : d.neighbors(z))
      if (std::find(vs.begin(), vs.end(), n) == vs.end()) ++external;
    if (external != 1) return false;
  }
  for (VertexId x : {x1, x2}) {
    std::size_t external = 0;
    for (VertexId n : d.neighbors(x))
      if (std::find(vs.begin(), vs.end(), n) == vs.end()) ++external;
    if (external != 1) return false;
  }
  return true;
}

bool match_hopf(const Diagram& d, VertexId z, VertexId x) {
  if (!d.contains(z) || !d.contains(x) || z == x) return false;
  const Vertex& vz = d.vertex(z);
  const Vertex& vx = d.vertex(x);
  if (vz.kind != VertexKind::Z || vx.kind != VertexKind::X) return false;
  return d.edge_multiplicity(z, x) >= 2;
}

} // namespace

std::optional<GadgetInfo> recognize_gadget(const Diagram& d, VertexId hub) {
  if (!d.contains(hub)) return std::nullopt;
  const Vertex& h = d.vertex(hub);
  if (h.kind != VertexKind::X || !is_basis_phase(h.phase)) return std::nullopt;
  if (has_self_loop(d, hub)) return std::nullopt;
  std::optional<VertexId> phase_hub;
  std::vector<VertexId> legs;
  for (VertexId n : d.neighbors(hub)) {
    if (!d.contains(n) || d.vertex(n).kind != VertexKind::Z) return std::nullopt;
    if (d.degree(n) == 1) {
      if (phase_hub) return std::nullopt; // at most one dangling phase hub
      phase_hub = n;
    } else {
      legs.push_back(n);
    }
  }
  if (!phase_hub || legs.empty()) return std::nullopt;
  if (d.edge_multiplicity(hub, *phase_hub) != 1) return std::nullopt;
  std::sort(legs.begin(), legs.end());
  if (std::adjacent_find(legs.begin(), legs.end()) != legs.end()) return std::nullopt;
  for (VertexId leg : legs)
    if (d.edge_multiplicity(hub, leg) != 1) return std::nullopt;
  return GadgetInfo{hub, *phase_hub, std::move(legs)};
}

namespace {

bool match_gadget_fuse(const Diagram& d, VertexId h1, VertexId p1, VertexId h2, VertexId p2) {
  auto g1 = recognize_gadget(d, h1);
  auto g2 = recognize_gadget(d, h2);
  if (!g1 || !g2 || h1 == h2) return false;
  if (g1->phase_hub != p1 || g2->phase_hub != p2) return false;
  if (!is_zero_phase(d.vertex(h1).phase) || !is_zero_phase(d.vertex(h2).phase)) return false;
  return g1->legs == g2->legs;
}

// gadget_pi site shapes; returns the gadget when the site is valid
std::optional<GadgetInfo> match_gadget_pi(const Diagram& d, const std::vector<VertexId>& site) {
  if (site.size() < 2) return std::nullopt;
  auto g = recognize_gadget(d, site[0]);
  if (!g || g->phase_hub != site[1]) return std::nullopt;
  if (site.size() == 2) {
    // hub-flip form: the X hub itself carries pi
    if (!is_pi_phase(d.vertex(g->hub).phase)) return std::nullopt;
    return g;
  }
  if (!is_zero_phase(d.vertex(g->hub).phase)) return std::nullopt;
  // leg-push form: each listed pi spider sits on the wire of a distinct
  // degree-3 phase-free leg
  std::set<VertexId> used_legs;
  for (std::size_t i = 2; i < site.size(); ++i) {
    VertexId q = site[i];
    if (!d.contains(q)) return std::nullopt;
    const Vertex& vq = d.vertex(q);
    if (vq.kind != VertexKind::X || !is_pi_phase(vq.phase)) return std::nullopt;
    if (d.degree(q) != 2 || has_self_loop(d, q)) return std::nullopt;
    std::optional<VertexId> leg;
    for (VertexId n : d.neighbors(q)) {
      if (std::find(g->legs.begin(), g->legs.end(), n) != g->legs.end()) leg = n;
    }
    if (!leg || used_legs.count(*leg)) return std::nullopt;
    if (d.edge_multiplicity(q, *leg) != 1) return std::nullopt;
    const Vertex& vleg = d.vertex(*leg);
    if (!is_zero_phase(vleg.phase) || d.degree(*leg) != 3 || has_self_loop(d, *leg))
      return std::nullopt;
    used_legs.insert(*leg);
  }
  return g;
}

// ---------------------------------------------------------------------------
// applications (operate on a copy)

void drop_self_loops(Diagram& d, VertexId v) {
  while (d.edge_multiplicity(v, v) > 0) d.remove_one_edge(v, v);
}

Diagram apply_fuse(Diagram d, VertexId u, VertexId v) {
  d.add_phase(u, d.vertex(v).phase);
  std::vector<VertexId> ns = d.neighbors(v);
  d.remove_vertex(v);
  for (VertexId w : ns) {
    if (w == u || w == v) continue; // connecting edges and v's self-loops vanish
    d.add_edge(u, w);
  }
  drop_self_loops(d, u);
  return d;
}

Diagram apply_identity(Diagram d, VertexId v) {
  auto ns = d.neighbors(v);
  d.remove_vertex(v);
  d.add_edge(ns[0], ns[1]);
  if (ns[0] == ns[1] && is_spider(d.vertex(ns[0]).kind)) drop_self_loops(d, ns[0]);
  return d;
}

Diagram apply_pi(Diagram d, VertexId pusher, VertexId target) {
  const VertexKind pi_color = d.vertex(pusher).kind;
  const LinearPhase theta = d.vertex(target).phase;
  d.multiply_scalar(ScalarExpr::exp_i(theta));
  d.set_phase(target, theta.negated());
  // the pusher's far side reconnects straight to the target
  std::optional<VertexId> far;
  for (VertexId n : d.neighbors(pusher))
    if (n != target) far = n;
  std::vector<std::size_t> target_edges = d.incident_edges(target);
  // copy a pi spider onto every other leg of the target
  std::vector<VertexId> other_ends;
  for (std::size_t ei : target_edges) {
    const Edge& e = d.edges()[ei];
    VertexId w = (e.a == target) ? e.b : e.a;
    if (w == pusher) continue;
    other_ends.push_back(w);
  }
  d.remove_vertex(pusher);
  if (far) d.add_edge(target, *far);
  for (VertexId w : other_ends) {
    d.remove_one_edge(target, w);
    VertexId q = d.add_vertex(pi_color, LinearPhase::pi());
    d.add_edge(target, q);
    d.add_edge(q, w);
  }
  return d;
}

Diagram apply_copy(Diagram d, VertexId state, VertexId through) {
  const Vertex s = d.vertex(state);
  const Vertex t = d.vertex(through);
  const long long k = static_cast<long long>(d.degree(through)) - 1;
  ScalarExpr factor = ScalarExpr::sqrt2_pow(static_cast<int>(1 - k));
  if (is_pi_phase(s.phase)) factor = factor * ScalarExpr::exp_i(t.phase);
  d.multiply_scalar(factor);
  std::vector<VertexId> ends;
  for (VertexId n : d.neighbors(through))
    if (n != state) ends.push_back(n);
  d.remove_vertex(state);
  d.remove_vertex(through);
  for (VertexId w : ends) {
    VertexId q = d.add_vertex(s.kind, s.phase);
    d.add_edge(q, w);
  }
  return d;
}

Diagram apply_bialgebra(Diagram d, VertexId z1, VertexId z2, VertexId x1, VertexId x2) {
  auto external = [&](VertexId v) {
    std::array<VertexId, 4> vs{z1, z2, x1, x2};
    for (VertexId n : d.neighbors(v))
      if (std::find(vs.begin(), vs.end(), n) == vs.end()) return n;
    raise(Errc::stale_match, "bialgebra site lost its external edge");
  };
  VertexId wz1 = external(z1), wz2 = external(z2), wx1 = external(x1), wx2 = external(x2);
  for (VertexId v : {z1, z2, x1, x2}) d.remove_vertex(v);
  VertexId nx = d.add_vertex(VertexKind::X);
  VertexId nz = d.add_vertex(VertexKind::Z);
  d.add_edge(nx, nz);
  d.add_edge(nx, wz1);
  d.add_edge(nx, wz2);
  d.add_edge(nz, wx1);
  d.add_edge(nz, wx2);
  d.multiply_scalar(ScalarExpr::sqrt2_pow(-1));
  return d;
}

Diagram apply_hopf(Diagram d, VertexId z, VertexId x) {
  d.remove_one_edge(z, x);
  d.remove_one_edge(z, x);
  d.multiply_scalar(ScalarExpr::constant(GaussianRational(Rational(1, 2))));
  return d;
}

Diagram apply_gadget_fuse(Diagram d, VertexId h1, VertexId p1, VertexId h2, VertexId p2) {
  auto g = recognize_gadget(d, h1);
  const long long k = static_cast<long long>(g->legs.size());
  d.add_phase(p1, d.vertex(p2).phase);
  d.remove_vertex(p2);
  d.remove_vertex(h2);
  d.multiply_scalar(ScalarExpr::sqrt2_pow(static_cast<int>(1 - k)));
  return d;
}

Diagram apply_gadget_pi(Diagram d, const std::vector<VertexId>& site) {
  VertexId hub = site[0], phase_hub = site[1];
  if (site.size() == 2) {
    const LinearPhase theta = d.vertex(phase_hub).phase;
    d.multiply_scalar(ScalarExpr::exp_i(theta));
    d.set_phase(phase_hub, theta.negated());
    d.set_phase(hub, LinearPhase{});
    return d;
  }
  const LinearPhase theta = d.vertex(phase_hub).phase;
  const std::size_t s = site.size() - 2;
  for (std::size_t i = 2; i < site.size(); ++i) {
    VertexId q = site[i];
    // q sits between w and the leg; move it to the leg's other wire side
    VertexId leg = 0, w = 0;
    for (VertexId n : d.neighbors(q)) {
      auto g = recognize_gadget(d, hub);
      if (std::find(g->legs.begin(), g->legs.end(), n) != g->legs.end())
        leg = n;
      else
        w = n;
    }
    VertexId w2 = 0;
    for (VertexId n : d.neighbors(leg))
      if (n != q && n != hub) w2 = n;
    d.remove_one_edge(q, w);
    d.remove_one_edge(q, leg);
    d.remove_one_edge(leg, w2);
    d.add_edge(w, leg);
    d.add_edge(leg, q);
    d.add_edge(q, w2);
  }
  if (s % 2 == 1) {
    d.multiply_scalar(ScalarExpr::exp_i(theta));
    d.set_phase(phase_hub, theta.negated());
  }
  return d;
}

} // namespace

std::vector<Match> find_matches(const Diagram& d, RuleId rule) {
  std::vector<Match> out;
  auto vertices = [&] {
    std::vector<VertexId> vs;
    for (const auto& [id, v] : d.vertices()) vs.push_back(id);
    return vs;
  }();
  switch (rule) {
  case RuleId::fuse: {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : d.edges()) {
      if (e.a == e.b) continue;
      if (match_fuse(d, e.a, e.b) && seen.insert({e.a, e.b}).second)
        out.push_back({rule, {e.a, e.b}});
    }
    break;
  }
  case RuleId::identity:
    for (VertexId v : vertices)
      if (match_identity(d, v)) out.push_back({rule, {v}});
    break;
  case RuleId::pi:
    for (VertexId p : vertices)
      for (VertexId t : vertices)
        if (match_pi(d, p, t)) out.push_back({rule, {p, t}});
    break;
  case RuleId::copy:
    for (VertexId s : vertices)
      for (VertexId t : vertices)
        if (match_copy(d, s, t)) out.push_back({rule, {s, t}});
    break;
  case RuleId::bialgebra:
    for (VertexId z1 : vertices)
      for (VertexId z2 : vertices) {
        if (z2 <= z1) continue;
        for (VertexId x1 : vertices)
          for (VertexId x2 : vertices) {
            if (x2 <= x1) continue;
            if (match_bialgebra(d, z1, z2, x1, x2)) out.push_back({rule, {z1, z2, x1, x2}});
          }
      }
    break;
  case RuleId::hopf: {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : d.edges()) {
      if (e.a == e.b) continue;
      VertexId z = e.a, x = e.b;
      if (d.contains(z) && d.contains(x)) {
        if (d.vertex(z).kind == VertexKind::X && d.vertex(x).kind == VertexKind::Z)
          std::swap(z, x);
        if (match_hopf(d, z, x) && seen.insert({z, x}).second) out.push_back({rule, {z, x}});
      }
    }
    break;
  }
  case RuleId::gadget_fuse:
    for (VertexId h1 : vertices) {
      auto g1 = recognize_gadget(d, h1);
      if (!g1 || !is_zero_phase(d.vertex(h1).phase)) continue;
      for (VertexId h2 : vertices) {
        if (h2 <= h1) continue;
        auto g2 = recognize_gadget(d, h2);
        if (!g2 || !is_zero_phase(d.vertex(h2).phase)) continue;
        if (g1->legs == g2->legs)
          out.push_back({rule, {h1, g1->phase_hub, h2, g2->phase_hub}});
      }
    }
    break;
  case RuleId::gadget_pi:
    for (VertexId h : vertices) {
      auto g = recognize_gadget(d, h);
      if (!g) continue;
      if (is_pi_phase(d.vertex(h).phase)) {
        out.push_back({rule, {h, g->phase_hub}});
        continue;
      }
      // collect all pi spiders sitting on wires of qualifying legs
      std::vector<VertexId> pis;
      for (VertexId leg : g->legs) {
        if (!is_zero_phase(d.vertex(leg).phase) || d.degree(leg) != 3) continue;
        for (VertexId n : d.neighbors(leg)) {
          if (n == h || !is_spider(d.vertex(n).kind)) continue;
          const Vertex& vn = d.vertex(n);
          if (vn.kind == VertexKind::X && is_pi_phase(vn.phase) && d.degree(n) == 2 &&
              !has_self_loop(d, n) && d.edge_multiplicity(n, leg) == 1) {
            pis.push_back(n);
            break; // one per leg
          }
        }
      }
      if (!pis.empty()) {
        std::vector<VertexId> site{h, g->phase_hub};
        site.insert(site.end(), pis.begin(), pis.end());
        if (match_gadget_pi(d, site)) out.push_back({rule, std::move(site)});
      }
    }
    break;
  }
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) { return a.site < b.site; });
  return out;
}

Diagram apply_rule(const Diagram& d, const Match& m) {
  auto stale = [&] { raise(Errc::stale_match, "rule pattern no longer present at site"); };
  switch (m.rule) {
  case RuleId::fuse:
    if (m.site.size() != 2 || !match_fuse(d, m.site[0], m.site[1])) stale();
    return apply_fuse(d, m.site[0], m.site[1]);
  case RuleId::identity:
    if (m.site.size() != 1 || !match_identity(d, m.site[0])) stale();
    return apply_identity(d, m.site[0]);
  case RuleId::pi:
    if (m.site.size() != 2 || !match_pi(d, m.site[0], m.site[1])) stale();
    return apply_pi(d, m.site[0], m.site[1]);
  case RuleId::copy:
    if (m.site.size() != 2 || !match_copy(d, m.site[0], m.site[1])) stale();
    return apply_copy(d, m.site[0], m.site[1]);
  case RuleId::bialgebra:
    if (m.site.size() != 4 || !match_bialgebra(d, m.site[0], m.site[1], m.site[2], m.site[3]))
      stale();
    return apply_bialgebra(d, m.site[0], m.site[1], m.site[2], m.site[3]);
  case RuleId::hopf:
    if (m.site.size() != 2 || !match_hopf(d, m.site[0], m.site[1])) stale();
    return apply_hopf(d, m.site[0], m.site[1]);
  case RuleId::gadget_fuse:
    if (m.site.size() != 4 ||
        !match_gadget_fuse(d, m.site[0], m.site[1], m.site[2], m.site[3]))
      stale();
    return apply_gadget_fuse(d, m.site[0], m.site[1], m.site[2], m.site[3]);
  case RuleId::gadget_pi:
    if (!match_gadget_pi(d, m.site)) stale();
    return apply_gadget_pi(d, m.site);
  }
  raise(Errc::stale_match, "unknown rule id");
}

namespace {

/// Progress policy for pi pushes inside the fixpoint driver: through a
/// degree-2 target only when the landing side consumes the pi spider.
bool pi_push_progresses(const Diagram& d, VertexId pusher, VertexId target) {
  std::size_t deg = d.degree(target);
  if (deg != 2) return true; // absorption (deg 1) or branching (deg >= 3)
  for (VertexId far : d.neighbors(target)) {
    if (far == pusher) continue;
    const Vertex& vf = d.vertex(far);
    if (vf.kind == d.vertex(pusher).kind) return true; // will fuse
    if (is_spider(vf.kind) && d.degree(far) == 1) return true;
  }
  return false;
}

} // namespace

FixpointResult simplify_fixpoint(const Diagram& d, std::span<const RuleId> rules,
                                 std::size_t max_steps) {
  FixpointResult result{d, 0, false};
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (RuleId rule : rules) {
      auto matches = find_matches(result.diagram, rule);
      const Match* chosen = nullptr;
      for (const auto& m : matches) {
        if (rule == RuleId::pi && !pi_push_progresses(result.diagram, m.site[0], m.site[1]))
          continue;
        if (rule == RuleId::gadget_pi && m.site.size() > 2) continue; // handled via pi + fuse
        chosen = &m;
        break;
      }
      if (!chosen) continue;
      if (result.steps >= max_steps) {
        result.budget_exhausted = true;
        return result;
      }
      result.diagram = apply_rule(result.diagram, *chosen);
      ++result.steps;
      progressed = true;
      break;
    }
  }
  return result;
}

} // namespace zxeval
