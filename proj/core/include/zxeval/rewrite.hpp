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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zxeval/diagram.hpp"

namespace zxeval {

/// Scalar-exact local rewrite rules. Every application preserves the
/// diagram's value including the global scalar; the exact constants are:
///   fuse         merge same-color adjacent spiders, phases add       (x 1)
///   identity     drop a phase-free degree-2 spider                   (x 1)
///   pi           push a pi spider through an opposite-color spider
///                of phase t, negating it                             (x e^{it})
///   copy         copy a degree-1 basis-state spider (phase a*pi)
///                through an opposite-color spider of phase t and
///                degree k+1                              (x sqrt2^{1-k} e^{iat})
///   bialgebra    contract the complete bipartite Z-Z/X-X 4-cycle
///                core into a single X-Z pair                     (x 1/sqrt2)
///   hopf         delete a parallel Z-X edge pair                     (x 1/2)
///   gadget_fuse  merge two phase gadgets on the same k legs,
///                hub phases add                             (x sqrt2^{1-k})
///   gadget_pi    push pi spiders sitting on s legs through a
///                gadget of hub phase t, negating t iff s is odd
///                                                    (x e^{it} iff s odd)
enum class RuleId : std::uint8_t {
  fuse,
  identity,
  pi,
  copy,
  bialgebra,
  hopf,
  gadget_fuse,
  gadget_pi,
};

/// CLI-facing short names: "f","id","pi","c","b","h","gf","gpi".
std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

/// A located rule application. `site` binds vertex ids to the rule's pattern
/// roles:
///   fuse         {kept, merged}
///   identity     {spider}
///   pi           {pusher, target}
///   copy         {state, through}
///   bialgebra    {z1, z2, x1, x2}
///   hopf         {z, x}
///   gadget_fuse  {hub1, phase_hub1, hub2, phase_hub2}
///   gadget_pi    {hub, phase_hub} (hub carries pi) or
///                {hub, phase_hub, pi_spider...} (pi spiders on leg wires)
struct Match {
  RuleId rule;
  std::vector<VertexId> site;
};

/// Recognized phase-gadget occurrence: X hub adjacent to a degree-1 Z phase
/// hub and k >= 1 distinct Z leg spiders (one edge each).
struct GadgetInfo {
  VertexId hub;
  VertexId phase_hub;
  std::vector<VertexId> legs; // sorted
};

std::optional<GadgetInfo> recognize_gadget(const Diagram& d, VertexId hub);

/// All structural matches of `rule`, sorted by site for determinism.
std::vector<Match> find_matches(const Diagram& d, RuleId rule);

/// Applies one match, revalidating the pattern first (Errc::stale_match when
/// it no longer holds). Returns the rewritten diagram; the input is untouched.
Diagram apply_rule(const Diagram& d, const Match& m);

struct FixpointResult {
  Diagram diagram;
  std::size_t steps = 0;
  bool budget_exhausted = false;
};

/// Repeatedly applies the first available match in rule-list order until no
/// rule fires or `max_steps` applications were made (budget exhaustion is a
/// normal, flagged return). To guarantee progress the driver skips pi pushes
/// that would only shuttle a pi spider back and forth along a wire: a push
/// through a degree-2 spider is taken only when the landing neighbor absorbs
/// the pi (same color, or a degree-1 spider).
FixpointResult simplify_fixpoint(const Diagram& d, std::span<const RuleId> rules,
                                 std::size_t max_steps);

/// The default rule order used by the evaluator.
std::vector<RuleId> default_rule_order();

} // namespace zxeval
