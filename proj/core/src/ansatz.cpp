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

#include "zxeval/ansatz.hpp"

#include <algorithm>
#include <set>

namespace zxeval {

namespace {

std::string qaoa_gamma_name(int p, int layer) {
  return p == 1 ? "gamma" : "gamma_" + std::to_string(layer);
}
std::string qaoa_beta_name(int p, int layer) {
  return p == 1 ? "beta" : "beta_" + std::to_string(layer);
}
std::string hweff_name(const char* base, int qubit, int layer) {
  return std::string(base) + "_" + std::to_string(qubit) + std::to_string(layer);
}

ScalarExpr expr_pow(const ScalarExpr& e, int k) {
  ScalarExpr out = ScalarExpr::one();
  for (int i = 0; i < k; ++i) out = out * e;
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

} // namespace

std::vector<std::string> ansatz_parameters(const ProblemGraph& g, const AnsatzSpec& ansatz) {
  std::vector<std::string> out;
  if (std::holds_alternative<RyProduct>(ansatz)) {
    for (int q = 0; q < g.n; ++q) out.push_back("alpha_" + std::to_string(q));
  } else if (const auto* qaoa = std::get_if<Qaoa>(&ansatz)) {
    for (int k = 1; k <= qaoa->p; ++k) {
      out.push_back(qaoa_gamma_name(qaoa->p, k));
      out.push_back(qaoa_beta_name(qaoa->p, k));
    }
  } else {
    for (int q = 1; q <= 3; ++q)
      for (int layer = 1; layer <= 2; ++layer) {
        out.push_back(hweff_name("beta", q, layer));
        out.push_back(hweff_name("gamma", q, layer));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Diagram build_ry(const ProblemGraph& g) {
  DiagramBuilder b;
  std::vector<VertexId> outs;
  for (int q = 0; q < g.n; ++q) {
    LinearPhase alpha = LinearPhase::parameter("alpha_" + std::to_string(q));
    VertexId cap = b.x();
    VertexId pre = b.z(LinearPhase::pi_multiple(Rational(-1, 2)));
    VertexId rot = b.x(alpha);
    VertexId post = b.z(LinearPhase::pi_multiple(Rational(1, 2)));
    VertexId out = b.output();
    b.wire(cap, pre);
    b.wire(pre, rot);
    b.wire(rot, post);
    b.wire(post, out);
    outs.push_back(out);
    // X cap is sqrt2 |0>, and the spider chain is e^{i alpha/2} R_Y(alpha)
    b.scalar(ScalarExpr::sqrt2_pow(-1) * ScalarExpr::exp_i(alpha.scaled(Rational(-1, 2))));
  }
  return b.build({}, std::move(outs));
}

Diagram build_qaoa(const ProblemGraph& g, const Qaoa& spec) {
  if (spec.p < 1) raise(Errc::spec_mismatch, "layer count must be >= 1");
  DiagramBuilder b;
  std::vector<VertexId> cur(static_cast<std::size_t>(g.n));
  for (int q = 0; q < g.n; ++q) {
    cur[q] = b.z();           // (1,1) = sqrt2 |+>
    b.scalar(ScalarExpr::sqrt2_pow(-1));
  }
  for (int layer = 1; layer <= spec.p; ++layer) {
    LinearPhase gamma = LinearPhase::parameter(qaoa_gamma_name(spec.p, layer));
    LinearPhase beta = LinearPhase::parameter(qaoa_beta_name(spec.p, layer));
    // phase separation: exp(-i gamma C) = sqrt2^{|E|} prod of gadgets with
    // hub phase -gamma
    for (auto [u, v] : g.edges) {
      VertexId leg_u = b.z();
      VertexId leg_v = b.z();
      VertexId hub = b.x();
      VertexId phase_hub = b.z(gamma.negated());
      b.wire(cur[u], leg_u);
      b.wire(cur[v], leg_v);
      b.wire(leg_u, hub);
      b.wire(leg_v, hub);
      b.wire(hub, phase_hub);
      cur[u] = leg_u;
      cur[v] = leg_v;
      b.scalar(ScalarExpr::sqrt2_pow(1));
    }
    // mixing: per qubit exp(+i (beta/2) X) = e^{i beta/2} X(-beta)
    for (int q = 0; q < g.n; ++q) {
      VertexId mx = b.x(beta.negated());
      b.wire(cur[q], mx);
      cur[q] = mx;
      b.scalar(ScalarExpr::exp_i(beta.scaled(Rational(1, 2))));
    }
  }
  std::vector<VertexId> outs;
  for (int q = 0; q < g.n; ++q) {
    VertexId out = b.output();
    b.wire(cur[q], out);
    outs.push_back(out);
  }
  return b.build({}, std::move(outs));
}

Diagram build_hweff(const ProblemGraph& g) {
  if (g.n != 3) raise(Errc::spec_mismatch, "the hardware-efficient family is the 3-qubit variant");
  DiagramBuilder b;
  std::array<VertexId, 3> cur{};
  auto rotation_block = [&](int q, int layer) {
    // Yphase(beta~) = Z(pi/2) X(beta~) Z(-pi/2), then Zphase(gamma~)
    LinearPhase beta = LinearPhase::parameter(hweff_name("beta", q + 1, layer));
    LinearPhase gamma = LinearPhase::parameter(hweff_name("gamma", q + 1, layer));
    VertexId pre = b.z(LinearPhase::pi_multiple(Rational(-1, 2)));
    VertexId rot = b.x(beta);
    VertexId post = b.z(LinearPhase::pi_multiple(Rational(1, 2)));
    VertexId zrot = b.z(gamma);
    b.wire(cur[q], pre);
    b.wire(pre, rot);
    b.wire(rot, post);
    b.wire(post, zrot);
    cur[q] = zrot;
  };
  auto cnot = [&](int control, int target) {
    VertexId zc = b.z();
    VertexId xt = b.x();
    b.wire(cur[control], zc);
    b.wire(cur[target], xt);
    b.wire(zc, xt);
    cur[control] = zc;
    cur[target] = xt;
    b.scalar(ScalarExpr::sqrt2_pow(1));
  };
  for (int q = 0; q < 3; ++q) {
    cur[q] = b.x(); // sqrt2 |0>
    b.scalar(ScalarExpr::sqrt2_pow(-1));
  }
  for (int q = 0; q < 3; ++q) rotation_block(q, 1);
  cnot(0, 1);
  cnot(1, 2);
  for (int q = 0; q < 3; ++q) rotation_block(q, 2);
  std::vector<VertexId> outs;
  for (int q = 0; q < 3; ++q) {
    VertexId out = b.output();
    b.wire(cur[q], out);
    outs.push_back(out);
  }
  return b.build({}, std::move(outs));
}

} // namespace

Diagram build_state(const ProblemGraph& g, const AnsatzSpec& ansatz) {
  if (std::holds_alternative<RyProduct>(ansatz)) return build_ry(g);
  if (const auto* qaoa = std::get_if<Qaoa>(&ansatz)) return build_qaoa(g, *qaoa);
  return build_hweff(g);
}

Diagram expectation_diagram(const Diagram& state, const ObservableTerm& term) {
  const int n = static_cast<int>(state.outputs().size());
  for (int q : term.z_support)
    if (q < 0 || q >= n)
      raise(Errc::support_out_of_range, "observable qubit " + std::to_string(q) +
                                            " outside the state's " + std::to_string(n) +
                                            " qubits");
  DiagramBuilder b;
  std::vector<VertexId> ins, outs;
  for (int q = 0; q < n; ++q) {
    bool in_support =
        std::find(term.z_support.begin(), term.z_support.end(), q) != term.z_support.end();
    VertexId in = b.input();
    VertexId spider = b.z(in_support ? LinearPhase::pi() : LinearPhase{});
    VertexId out = b.output();
    b.wire(in, spider);
    b.wire(spider, out);
    ins.push_back(in);
    outs.push_back(out);
  }
  Diagram layer = b.build(std::move(ins), std::move(outs));
  return compose(compose(state, layer), adjoint(state));
}

std::array<int, 3> edge_neighborhoods(const ProblemGraph& g, std::pair<int, int> edge) {
  auto [u, v] = edge;
  if (!g.has_edge(u, v)) raise(Errc::edge_not_in_graph, "edge not in graph");
  auto nu_list = g.neighbors(u);
  auto nv_list = g.neighbors(v);
  std::set<int> nu_set(nu_list.begin(), nu_list.end());
  std::set<int> nv_set(nv_list.begin(), nv_list.end());
  int nu = 0, nv = 0, nuv = 0;
  for (int w : nu_set) {
    if (w == u || w == v) continue;
    if (nv_set.count(w))
      ++nuv;
    else
      ++nu;
  }
  for (int w : nv_set) {
    if (w == u || w == v) continue;
    if (!nu_set.count(w)) ++nv;
  }
  return {nu, nv, nuv};
}

ScalarExpr qaoa1_closed_form(const ProblemGraph& g, std::pair<int, int> edge) {
  auto [nu, nv, nuv] = edge_neighborhoods(g, edge);
  ScalarExpr cb = ScalarExpr::cos(LinearPhase::parameter("beta"));
  ScalarExpr sb = ScalarExpr::sin(LinearPhase::parameter("beta"));
  ScalarExpr cg = ScalarExpr::cos(LinearPhase::parameter("gamma"));
  ScalarExpr sg = ScalarExpr::sin(LinearPhase::parameter("gamma"));
  ScalarExpr first =
      cb * sb * sg * (expr_pow(cg, nu + nuv) + expr_pow(cg, nv + nuv));
  ScalarExpr sum = ScalarExpr::zero();
  for (int i = 1; i <= nuv; i += 2) {
    sum += ScalarExpr::integer(binomial(nuv, i)) * expr_pow(sg, 2 * i) *
           expr_pow(cg, 2 * (nuv - i));
  }
  return simplify(first + expr_pow(cg, nu + nv) * sb * sb * sum);
}

// ---------------------------------------------------------------------------
// hardware-efficient <Z2 Z3>

int hweff_parity_identity(const std::array<int, 8>& bits) {
  auto [l1, l2, l3, m2, m3, r1, r2, r3] = bits;
  if ((l1 + m2 + l3 + m3 + r3) % 2) return 0;
  if ((r1 + m2 + l3 + m3 + r3) % 2) return 0;
  if ((l2 + m2 + r2) % 2) return 0;
  return ((m2 * r1 + (m2 ^ m3) * r2 + m3 * r3) % 2) ? -1 : 1;
}

namespace {

/// Index remap between the identity's labels and the branch sites of the
/// Clifford core; F2-linear and an involution on the constraint subspace.
std::array<int, 8> hweff_core_bits(const std::array<int, 8>& bits) {
  auto [l1, l2, l3, m2, m3, r1, r2, r3] = bits;
  return {l1, l2, l3, (m2 + l3) % 2, (m3 + l1 + l2) % 2, r1, (r2 + l3) % 2, (r3 + l2 + l3) % 2};
}

} // namespace

Diagram hweff_core_diagram(const std::array<int, 8>& bits) {
  auto [l1, l2, l3, m2, m3, r1, r2, r3] = hweff_core_bits(bits);
  DiagramBuilder b;
  std::array<VertexId, 3> cur{};
  std::array<int, 3> kets{r1, r2, r3};
  std::array<int, 3> bras{l1, l2, l3};
  for (int q = 0; q < 3; ++q) {
    cur[q] = b.x(kets[q] ? LinearPhase::pi() : LinearPhase{});
    b.scalar(ScalarExpr::sqrt2_pow(-1)); // X(b pi) cap is sqrt2 |b>
  }
  auto cnot = [&](int control, int target) {
    VertexId zc = b.z();
    VertexId xt = b.x();
    b.wire(cur[control], zc);
    b.wire(cur[target], xt);
    b.wire(zc, xt);
    cur[control] = zc;
    cur[target] = xt;
    b.scalar(ScalarExpr::sqrt2_pow(1));
  };
  cnot(0, 1);
  cnot(1, 2);
  // middle insertions on qubits 2 and 3: Z(pi) for branch 0, -X(pi) for branch 1
  std::array<int, 2> mids{m2, m3};
  for (int q = 1; q < 3; ++q) {
    int m = mids[q - 1];
    VertexId s = m ? b.x(LinearPhase::pi()) : b.z(LinearPhase::pi());
    if (m) b.scalar(ScalarExpr::integer(-1));
    b.wire(cur[q], s);
    cur[q] = s;
  }
  cnot(1, 2);
  cnot(0, 1);
  for (int q = 0; q < 3; ++q) {
    VertexId effect = b.x(bras[q] ? LinearPhase::pi() : LinearPhase{});
    b.wire(cur[q], effect);
    b.scalar(ScalarExpr::sqrt2_pow(-1));
  }
  return b.build({}, {});
}

ScalarExpr hweff_zz_expectation() {
  ScalarExpr total = ScalarExpr::zero();
  std::array<ScalarExpr, 3> ket0, ket1, bra0, bra1;
  std::array<ScalarExpr, 3> mid0, mid1;
  for (int q = 0; q < 3; ++q) {
    LinearPhase beta1 = LinearPhase::parameter(hweff_name("beta", q + 1, 1));
    LinearPhase gamma1 = LinearPhase::parameter(hweff_name("gamma", q + 1, 1));
    LinearPhase beta2 = LinearPhase::parameter(hweff_name("beta", q + 1, 2));
    LinearPhase half = beta1.scaled(Rational(1, 2));
    ket0[q] = ScalarExpr::cos(half);
    ket1[q] = ScalarExpr::sin(half) * ScalarExpr::exp_i(gamma1);
    bra0[q] = ScalarExpr::cos(half);
    bra1[q] = ScalarExpr::sin(half) * ScalarExpr::exp_i(gamma1.negated());
    mid0[q] = ScalarExpr::cos(beta2);
    mid1[q] = ScalarExpr::sin(beta2);
  }
  for (int mask = 0; mask < 256; ++mask) {
    std::array<int, 8> bits{};
    for (int i = 0; i < 8; ++i) bits[i] = (mask >> (7 - i)) & 1;
    int weight = hweff_parity_identity(bits);
    if (weight == 0) continue;
    auto [l1, l2, l3, m2, m3, r1, r2, r3] = hweff_core_bits(bits);
    ScalarExpr coeff = ScalarExpr::integer(weight);
    std::array<int, 3> kets{r1, r2, r3};
    std::array<int, 3> bras{l1, l2, l3};
    for (int q = 0; q < 3; ++q) {
      coeff = coeff * (kets[q] ? ket1[q] : ket0[q]);
      coeff = coeff * (bras[q] ? bra1[q] : bra0[q]);
    }
    coeff = coeff * (m2 ? mid1[1] : mid0[1]);
    coeff = coeff * (m3 ? mid1[2] : mid0[2]);
    total += coeff;
  }
  return simplify(total);
}

} // namespace zxeval
