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

#include <array>
#include <variant>

#include "zxeval/diagram.hpp"
#include "zxeval/graph.hpp"

namespace zxeval {

/// Independent R_Y(alpha_q) on each qubit applied to |0...0>.
/// Parameters: alpha_0 .. alpha_{n-1}.
struct RyProduct {};

/// p alternating phase-separation and mixing layers on |+>^n. The layer-k
/// phase operator is exp(-i gamma_k C); the layer-k mixing unitary is
/// exp(+i (beta_k / 2) sum_q X_q), so that the per-qubit mixer spider carries
/// phase -beta_k. Parameters: "gamma","beta" for p = 1, else
/// "gamma_1".."gamma_p","beta_1".."beta_p".
struct Qaoa {
  int p = 1;
};

/// 3-qubit hardware-efficient SU(2) 2-local variant: per qubit a Y-axis phase
/// gate Yphase(t) = Z(pi/2) X(t) Z(-pi/2) followed by a Z phase gate, the
/// entangler CX(0,1) CX(1,2), and a second rotation layer of the same shape.
/// Parameters: beta_11..beta_32 (Y angles), gamma_11..gamma_32 (Z angles),
/// indexed qubit (1..3) then layer (1..2).
struct HwEffSu2 {};

using AnsatzSpec = std::variant<RyProduct, Qaoa, HwEffSu2>;

/// Parameter names of the family on this instance, sorted.
std::vector<std::string> ansatz_parameters(const ProblemGraph& g, const AnsatzSpec& ansatz);

/// Builds the ansatz state as a diagram with no inputs and g.n outputs whose
/// value equals the reference circuit statevector exactly, global scalar
/// included. Throws spec_mismatch when the family does not fit the instance.
Diagram build_state(const ProblemGraph& g, const AnsatzSpec& ansatz);

/// Closed diagram for <state| prod_{q in support} Z_q |state>.
Diagram expectation_diagram(const Diagram& state, const ObservableTerm& term);

/// The depth-1 layered-state Z_u Z_v expectation on a general graph in closed
/// form:
///   cb sb sg (cg^{nu+nuv} + cg^{nv+nuv})
///   + cg^{nu+nv} sb^2 sum_{i odd} C(nuv, i) sg^{2i} cg^{2(nuv-i)}
/// with nu, nv the exclusive neighborhood sizes of u and v and nuv the
/// common neighborhood size. Parameters "gamma", "beta".
ScalarExpr qaoa1_closed_form(const ProblemGraph& g, std::pair<int, int> edge);

/// Exclusive neighborhood sizes (n_u, n_v, n_uv) of an edge.
std::array<int, 3> edge_neighborhoods(const ProblemGraph& g, std::pair<int, int> edge);

/// Index bits l1 l2 l3 m2 m3 r1 r2 r3 of the two-term expansion of the eight
/// surviving rotations in the hardware-efficient <Z2 Z3> calculation; yields
/// 0 under any of three parity obstructions and otherwise the sign
/// (-1)^{m2 r1 + (m2 xor m3) r2 + m3 r3}.
int hweff_parity_identity(const std::array<int, 8>& bits);

/// The parameter-free Clifford core of the branch labeled by `bits`: basis
/// caps, the entangler pair, and the middle Z/X insertions, normalized so
/// that its exact contraction equals hweff_parity_identity(bits).
Diagram hweff_core_diagram(const std::array<int, 8>& bits);

/// <Z2 Z3> of the hardware-efficient ansatz as a ScalarExpr: expands the
/// eight surviving rotation spiders into branch indices and sums the
/// coefficient products weighted by hweff_parity_identity. Independent of
/// gamma_12, gamma_22, gamma_32 and beta_12 by construction.
ScalarExpr hweff_zz_expectation();

} // namespace zxeval
