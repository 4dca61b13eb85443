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

#include "zxeval/lincomb.hpp"
#include "zxeval/rewrite.hpp"

namespace zxeval {

/// Exactly contracts a closed diagram whose phases are all integer multiples
/// of pi/2. The result lives in the ring of Gaussian rationals times powers
/// of sqrt(2) and is returned as an atom-free ScalarExpr.
///
/// Spider tensor semantics: a Z spider of phase t maps the all-zero incident
/// edge configuration to 1, the all-one configuration to e^{it} and anything
/// else to 0; an X spider of phase t and degree k maps incident bits b to
/// 2^{-k/2} (1 + e^{it} (-1)^{b1 xor ... xor bk}). The value is the sum over
/// all edge-bit assignments of the product, times the diagram scalar.
/// (Assignments are enumerated over the equality classes that the Z spiders
/// force; this is the same sum with degenerate axes merged.)
///
/// Errors: not_closed, unsupported_phase (parameterized or non-(pi/2)Z phase,
/// the message names the vertex), too_large (enumeration guard).
ScalarExpr exact_contract(const Diagram& d);

enum class ExpandPolicy {
  /// Decompose parameter-carrying degree-2 X spiders, then parameterized
  /// phase gadgets, then parameter-carrying degree-2 Z spiders; any other
  /// parameterized spider only as a last resort.
  automatic,
  /// Decompose parameter-carrying spiders of any kind eagerly, in id order.
  all,
};

/// Controls evaluate_expectation: rewrite rule order, which spiders get
/// decomposed into linear combinations, and the term/step budgets.
struct Strategy {
  std::vector<RuleId> rules = default_rule_order();
  ExpandPolicy expand = ExpandPolicy::automatic;
  std::size_t term_budget = 4096;
  std::size_t rewrite_budget = 100000;
};

/// Reduces a closed expectation diagram to a ScalarExpr in the circuit
/// parameters: simplify with the rewrite rules, decompose a parameterized
/// spider or gadget into its two-term Clifford combination, distribute, and
/// recurse; parameter-free leaves are contracted exactly and the weighted
/// results summed.
///
/// Errors: not_closed; term_budget_exceeded when the number of processed
/// leaves exceeds the strategy budget; unsupported_phase when a parameterized
/// phase survives that the expansion policy refuses to decompose.
ScalarExpr evaluate_expectation(const Diagram& d, const Strategy& strategy = {});

} // namespace zxeval
