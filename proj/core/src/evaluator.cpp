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

#include "zxeval/evaluator.hpp"

#include <algorithm>
#include <numeric>

namespace zxeval {

namespace {

/// Union-find over edge indices; the edges of each Z spider are forced to
/// carry one common bit.
class EdgeClasses {
public:
  explicit EdgeClasses(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

/// e^{i * (k * pi/2)} as an exact Gaussian unit for phase p in (pi/2)Z.
GaussianRational clifford_unit(const LinearPhase& p) {
  // p.pi_part() in [0,2) with denominator 1 or 2
  Rational q = p.pi_part() * Rational(2); // in {0,1,2,3}
  switch (q.numerator() % 4) {
  case 0: return GaussianRational(Rational(1));
  case 1: return GaussianRational::unit_i();
  case 2: return GaussianRational(Rational(-1));
  default: return GaussianRational(Rational(0), Rational(-1));
  }
}

} // namespace

ScalarExpr exact_contract(const Diagram& d) {
  if (!d.is_closed()) raise(Errc::not_closed, "exact_contract requires a closed diagram");
  for (const auto& [id, v] : d.vertices()) {
    if (is_boundary(v.kind)) raise(Errc::not_closed, "closed diagram contains boundary vertex");
    if (!v.phase.is_half_pi_multiple())
      raise(Errc::unsupported_phase,
            "vertex " + std::to_string(id) + " carries phase " + v.phase.to_string() +
                " outside (pi/2)Z");
  }

  const auto& edges = d.edges();
  EdgeClasses classes(edges.size());
  // incident edge indices per vertex (self-loops listed twice)
  std::map<VertexId, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].a].push_back(i);
    if (edges[i].b != edges[i].a) incident[edges[i].b].push_back(i);
    else incident[edges[i].a].push_back(i);
  }
  for (const auto& [id, v] : d.vertices()) {
    if (v.kind != VertexKind::Z) continue;
    const auto& inc = incident[id];
    for (std::size_t i = 1; i < inc.size(); ++i) classes.unite(inc[0], inc[i]);
  }
  std::map<std::size_t, std::size_t> class_index; // root -> dense index
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t r = classes.find(i);
    if (class_index.find(r) == class_index.end()) {
      std::size_t next = class_index.size();
      class_index[r] = next;
    }
  }
  const std::size_t n_classes = class_index.size();
  if (n_classes > 26) raise(Errc::too_large, "too many free edge-bit classes to enumerate");

  // Precompute, per vertex, the dense class indices of its incident edges and
  // the Gaussian unit of its phase.
  struct SpiderInfo {
    bool is_z;
    GaussianRational unit;
    int degree;
    std::vector<std::size_t> cls; // dense class per incident slot
  };
  std::vector<SpiderInfo> spiders;
  GaussianRational isolated(Rational(1)); // product over degree-0 spiders
  int isolated_sqrt2 = 0;
  for (const auto& [id, v] : d.vertices()) {
    SpiderInfo s;
    s.is_z = (v.kind == VertexKind::Z);
    s.unit = clifford_unit(v.phase);
    const auto& inc = incident[id];
    s.degree = static_cast<int>(inc.size());
    if (s.degree == 0) {
      // both colors: value 1 + e^{it} (X normalization 2^{-0/2} = 1)
      isolated = isolated * (GaussianRational(Rational(1)) + s.unit);
      continue;
    }
    for (std::size_t e : inc) s.cls.push_back(class_index.at(classes.find(e)));
    spiders.push_back(std::move(s));
  }
  if (isolated.is_zero()) return ScalarExpr::zero();

  // enumerate class assignments; accumulate a0 + a1*sqrt2
  GaussianRational acc0(Rational(0)), acc1(Rational(0));
  const std::uint64_t total = std::uint64_t{1} << n_classes;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    GaussianRational val(Rational(1));
    int sqrt2 = 0;
    bool dead = false;
    for (const auto& s : spiders) {
      if (s.is_z) {
        // all incident bits equal (guaranteed within one class); the class bit
        // of the first slot decides 1 vs e^{it}
        bool one = (bits >> s.cls[0]) & 1;
        if (one) val = val * s.unit;
      } else {
        int parity = 0;
        for (std::size_t c : s.cls) parity ^= static_cast<int>((bits >> c) & 1);
        GaussianRational f = GaussianRational(Rational(1)) +
                             (parity ? -s.unit : s.unit);
        if (f.is_zero()) {
          dead = true;
          break;
        }
        val = val * f;
        sqrt2 -= s.degree;
      }
    }
    if (dead) continue;
    // fold sqrt2 exponent into {0,1}
    long long q = (sqrt2 >= 0) ? sqrt2 / 2 : -((-sqrt2 + 1) / 2);
    int r = sqrt2 - static_cast<int>(2 * q);
    Rational p2(1);
    for (long long i = 0; i < std::abs(q); ++i) p2 *= Rational(2);
    if (q < 0) p2 = Rational(1) / p2;
    val = val * GaussianRational(p2);
    if (r == 0)
      acc0 = acc0 + val;
    else
      acc1 = acc1 + val;
  }
  ScalarExpr result = ScalarExpr::constant(isolated) *
                      (ScalarExpr::constant(acc0) +
                       ScalarExpr::constant(acc1) * ScalarExpr::sqrt2_pow(1));
  return result * d.scalar();
}

namespace {

struct ExpansionSite {
  enum class Kind { x_rotation, gadget, z_rotation, general } kind;
  VertexId vertex; // spider or gadget hub
};

bool phase_has_parameter(const LinearPhase& p) { return !p.terms().empty(); }

std::optional<ExpansionSite> pick_site(const Diagram& d, ExpandPolicy policy) {
  if (policy == ExpandPolicy::all) {
    for (const auto& [id, v] : d.vertices())
      if (is_spider(v.kind) && phase_has_parameter(v.phase))
        return ExpansionSite{ExpansionSite::Kind::general, id};
    return std::nullopt;
  }
  // parameter-carrying degree-2 X spiders first (rotations blocked from
  // fusing), then parameterized gadget hubs, then degree-2 Z rotations
  for (const auto& [id, v] : d.vertices())
    if (v.kind == VertexKind::X && phase_has_parameter(v.phase) && d.degree(id) == 2)
      return ExpansionSite{ExpansionSite::Kind::x_rotation, id};
  for (const auto& [id, v] : d.vertices()) {
    if (v.kind != VertexKind::X) continue;
    auto g = recognize_gadget(d, id);
    if (g && phase_has_parameter(d.vertex(g->phase_hub).phase))
      return ExpansionSite{ExpansionSite::Kind::gadget, id};
  }
  for (const auto& [id, v] : d.vertices())
    if (v.kind == VertexKind::Z && phase_has_parameter(v.phase) && d.degree(id) == 2)
      return ExpansionSite{ExpansionSite::Kind::z_rotation, id};
  // last resort: split any remaining parameterized spider (degenerate gadgets
  // can fuse their phase into a high-degree wire spider)
  for (const auto& [id, v] : d.vertices())
    if (is_spider(v.kind) && phase_has_parameter(v.phase))
      return ExpansionSite{ExpansionSite::Kind::general, id};
  return std::nullopt;
}

/// General spider split, any degree:
///   S(t) = e^{it/2} ( cos(t/2) [phase 0] - i sin(t/2) [phase pi] ).
LinComb expand_general(const Diagram& host, VertexId site) {
  const LinearPhase t = host.vertex(site).phase;
  LinearPhase half = t.scaled(Rational(1, 2));
  LinComb out(host.inputs().size(), host.outputs().size());
  Diagram a = host;
  a.set_phase(site, LinearPhase{});
  out.add_term(ScalarExpr::exp_i(half) * ScalarExpr::cos(half), std::move(a));
  Diagram b = host;
  b.set_phase(site, LinearPhase::pi());
  out.add_term(ScalarExpr::exp_i(half) * (-ScalarExpr::unit_i()) * ScalarExpr::sin(half),
               std::move(b));
  return out;
}

struct EvalState {
  const Strategy& strategy;
  std::size_t leaves = 0;
};

ScalarExpr eval_rec(const Diagram& d, EvalState& st) {
  FixpointResult fx = simplify_fixpoint(d, st.strategy.rules, st.strategy.rewrite_budget);
  auto site = pick_site(fx.diagram, st.strategy.expand);
  if (!site) {
    if (++st.leaves > st.strategy.term_budget)
      raise(Errc::term_budget_exceeded,
            "term budget " + std::to_string(st.strategy.term_budget) +
                " exceeded; reduce the instance (e.g. apply the lightcone reduction) or raise "
                "the budget");
    return exact_contract(fx.diagram);
  }
  LinComb lc = [&] {
    switch (site->kind) {
    case ExpansionSite::Kind::x_rotation: return decompose_x_rotation(fx.diagram, site->vertex);
    case ExpansionSite::Kind::gadget: return decompose_phase_gadget(fx.diagram, site->vertex);
    case ExpansionSite::Kind::z_rotation: return decompose_z_rotation(fx.diagram, site->vertex);
    case ExpansionSite::Kind::general: return expand_general(fx.diagram, site->vertex);
    }
    raise(Errc::unsupported_phase, "unreachable expansion kind");
  }();
  ScalarExpr total = ScalarExpr::zero();
  for (const auto& term : lc.terms()) total += term.coeff * eval_rec(term.diagram, st);
  return total;
}

} // namespace

ScalarExpr evaluate_expectation(const Diagram& d, const Strategy& strategy) {
  if (!d.is_closed()) raise(Errc::not_closed, "evaluate_expectation requires a closed diagram");
  EvalState st{strategy};
  return simplify(eval_rec(d, st));
}

} // namespace zxeval
