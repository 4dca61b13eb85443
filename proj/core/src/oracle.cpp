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

#include "zxeval/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zxeval::oracle {

namespace {

using cd = std::complex<double>;

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

} // namespace

ComplexMatrix contract_numeric(const Diagram& d, const Binding& binding) {
  const auto& edges = d.edges();
  const std::size_t n_in = d.inputs().size();
  const std::size_t n_out = d.outputs().size();
  if (n_in + n_out > 10) raise(Errc::too_large, "too many boundary qubits for dense contraction");

  std::map<VertexId, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].a].push_back(i);
    incident[edges[i].b == edges[i].a ? edges[i].a : edges[i].b].push_back(i);
  }
  EdgeClasses classes(edges.size());
  for (const auto& [id, v] : d.vertices()) {
    if (v.kind != VertexKind::Z) continue;
    const auto& inc = incident[id];
    for (std::size_t i = 1; i < inc.size(); ++i) classes.unite(inc[0], inc[i]);
  }
  // dense class ids; boundary-pinned classes are excluded from enumeration
  std::map<std::size_t, int> class_of_root;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t r = classes.find(i);
    if (!class_of_root.count(r)) {
      int next = static_cast<int>(class_of_root.size());
      class_of_root[r] = next;
    }
  }
  const std::size_t n_classes = class_of_root.size();
  // boundary pins: (class, boundary slot); slot k < n_out are outputs
  std::vector<std::vector<std::size_t>> pins_of_class(n_classes);
  auto pin = [&](VertexId b, std::size_t slot) {
    const auto& inc = incident[b];
    if (inc.size() != 1) raise(Errc::dangling_wire, "boundary vertex degree must be 1");
    pins_of_class[static_cast<std::size_t>(class_of_root.at(classes.find(inc[0])))].push_back(slot);
  };
  for (std::size_t k = 0; k < n_out; ++k) pin(d.outputs()[k], k);
  for (std::size_t k = 0; k < n_in; ++k) pin(d.inputs()[k], n_out + k);

  std::vector<int> free_classes;
  for (std::size_t c = 0; c < n_classes; ++c)
    if (pins_of_class[c].empty()) free_classes.push_back(static_cast<int>(c));
  if (free_classes.size() + n_in + n_out > 26)
    raise(Errc::too_large, "too many edge-bit variables for dense contraction");

  struct SpiderInfo {
    bool is_z;
    cd phase_factor; // e^{i t}
    int degree;
    std::vector<int> cls;
  };
  std::vector<SpiderInfo> spiders;
  cd isolated = 1.0;
  for (const auto& [id, v] : d.vertices()) {
    if (is_boundary(v.kind)) continue;
    SpiderInfo s;
    s.is_z = (v.kind == VertexKind::Z);
    s.phase_factor = std::exp(cd(0, 1) * v.phase.eval(binding));
    const auto& inc = incident[id];
    s.degree = static_cast<int>(inc.size());
    if (s.degree == 0) {
      isolated *= (1.0 + s.phase_factor);
      continue;
    }
    for (std::size_t e : inc)
      s.cls.push_back(class_of_root.at(classes.find(e)));
    spiders.push_back(std::move(s));
  }
  const cd global = isolated * d.scalar().eval(binding);

  ComplexMatrix out(std::size_t{1} << n_out, std::size_t{1} << n_in);
  std::vector<int> bit(n_classes, 0);
  const double sqrt2 = std::numbers::sqrt2;
  for (std::size_t row = 0; row < out.rows; ++row) {
    for (std::size_t col = 0; col < out.cols; ++col) {
      auto slot_bit = [&](std::size_t slot) -> int {
        if (slot < n_out) return static_cast<int>((row >> (n_out - 1 - slot)) & 1);
        std::size_t k = slot - n_out;
        return static_cast<int>((col >> (n_in - 1 - k)) & 1);
      };
      // force pinned classes; inconsistent pins kill the entry
      bool consistent = true;
      for (std::size_t c = 0; c < n_classes && consistent; ++c) {
        if (pins_of_class[c].empty()) continue;
        int b0 = slot_bit(pins_of_class[c][0]);
        for (std::size_t j = 1; j < pins_of_class[c].size(); ++j)
          if (slot_bit(pins_of_class[c][j]) != b0) consistent = false;
        bit[c] = b0;
      }
      if (!consistent) continue;
      cd total = 0.0;
      const std::uint64_t combos = std::uint64_t{1} << free_classes.size();
      for (std::uint64_t mask = 0; mask < combos; ++mask) {
        for (std::size_t j = 0; j < free_classes.size(); ++j)
          bit[static_cast<std::size_t>(free_classes[j])] = static_cast<int>((mask >> j) & 1);
        cd val = 1.0;
        for (const auto& s : spiders) {
          if (s.is_z) {
            if (bit[static_cast<std::size_t>(s.cls[0])]) val *= s.phase_factor;
          } else {
            int parity = 0;
            for (int c : s.cls) parity ^= bit[static_cast<std::size_t>(c)];
            val *= std::pow(sqrt2, -s.degree) *
                   (1.0 + s.phase_factor * (parity ? -1.0 : 1.0));
          }
          if (val == 0.0) break;
        }
        total += val;
      }
      out.at(row, col) = total * global;
    }
  }
  return out;
}

std::complex<double> contract_numeric_closed(const Diagram& d, const Binding& binding) {
  if (!d.is_closed()) raise(Errc::not_closed, "diagram has boundaries");
  return contract_numeric(d, binding).at(0, 0);
}

// ---------------------------------------------------------------------------
// statevector reference

namespace {

using State = std::vector<cd>;

int bit_of(std::size_t x, int n, int q) { return static_cast<int>((x >> (n - 1 - q)) & 1); }

void apply_1q(State& psi, int n, int q, const std::array<cd, 4>& m) {
  const std::size_t stride = std::size_t{1} << (n - 1 - q);
  for (std::size_t x = 0; x < psi.size(); ++x) {
    if (x & stride) continue;
    cd a = psi[x], b = psi[x | stride];
    psi[x] = m[0] * a + m[1] * b;
    psi[x | stride] = m[2] * a + m[3] * b;
  }
}

void apply_cnot(State& psi, int n, int control, int target) {
  const std::size_t cs = std::size_t{1} << (n - 1 - control);
  const std::size_t ts = std::size_t{1} << (n - 1 - target);
  for (std::size_t x = 0; x < psi.size(); ++x)
    if ((x & cs) && !(x & ts)) std::swap(psi[x], psi[x | ts]);
}

int cut_value(std::size_t x, int n, const ProblemGraph& g) {
  int cut = 0;
  for (auto [u, v] : g.edges)
    if (bit_of(x, n, u) != bit_of(x, n, v)) ++cut;
  return cut;
}

double bound(const Binding& binding, const std::string& name) {
  auto it = binding.find(name);
  if (it == binding.end()) raise(Errc::missing_binding, "no binding for parameter '" + name + "'");
  return it->second;
}

State ry_state(const ProblemGraph& g, const Binding& binding) {
  const int n = g.n;
  State psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  for (int q = 0; q < n; ++q) {
    double a = bound(binding, "alpha_" + std::to_string(q));
    double c = std::cos(a / 2), s = std::sin(a / 2);
    apply_1q(psi, n, q, {cd(c), cd(-s), cd(s), cd(c)});
  }
  return psi;
}

State qaoa_state(const ProblemGraph& g, int p, const Binding& binding) {
  const int n = g.n;
  if (n > 12) raise(Errc::too_large, "dense simulation capped at 12 qubits");
  State psi(std::size_t{1} << n, 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n)));
  for (int layer = 1; layer <= p; ++layer) {
    double gamma =
        bound(binding, p == 1 ? "gamma" : "gamma_" + std::to_string(layer));
    double beta = bound(binding, p == 1 ? "beta" : "beta_" + std::to_string(layer));
    for (std::size_t x = 0; x < psi.size(); ++x)
      psi[x] *= std::exp(cd(0, -gamma * cut_value(x, n, g)));
    double c = std::cos(beta / 2), s = std::sin(beta / 2);
    for (int q = 0; q < n; ++q) apply_1q(psi, n, q, {cd(c), cd(0, s), cd(0, s), cd(c)});
  }
  return psi;
}

State hweff_state(const ProblemGraph& g, const Binding& binding) {
  if (g.n != 3) raise(Errc::spec_mismatch, "3-qubit family");
  State psi(8, 0.0);
  psi[0] = 1.0;
  auto rotation_layer = [&](int layer) {
    for (int q = 0; q < 3; ++q) {
      double t = bound(binding, "beta_" + std::to_string(q + 1) + std::to_string(layer));
      double gz = bound(binding, "gamma_" + std::to_string(q + 1) + std::to_string(layer));
      cd ph = std::exp(cd(0, t / 2));
      double c = std::cos(t / 2), s = std::sin(t / 2);
      // Yphase(t) = Z(pi/2) X(t) Z(-pi/2) = e^{it/2} R_Y(t)
      apply_1q(psi, 3, q, {ph * c, ph * -s, ph * s, ph * c});
      apply_1q(psi, 3, q, {cd(1), cd(0), cd(0), std::exp(cd(0, gz))});
    }
  };
  rotation_layer(1);
  apply_cnot(psi, 3, 0, 1);
  apply_cnot(psi, 3, 1, 2);
  rotation_layer(2);
  return psi;
}

} // namespace

std::vector<std::complex<double>> statevector(const ProblemGraph& g, const AnsatzSpec& ansatz,
                                              const Binding& binding) {
  if (g.n > 12) raise(Errc::too_large, "dense simulation capped at 12 qubits");
  if (std::holds_alternative<RyProduct>(ansatz)) return ry_state(g, binding);
  if (const auto* qaoa = std::get_if<Qaoa>(&ansatz)) return qaoa_state(g, qaoa->p, binding);
  return hweff_state(g, binding);
}

/// Gate-compiled phase layer (CNOT - RZ - CNOT per edge); used by tests to
/// pin the fast diagonal path.
std::vector<std::complex<double>> statevector_qaoa_gates(const ProblemGraph& g, int p,
                                                         const Binding& binding) {
  const int n = g.n;
  if (n > 12) raise(Errc::too_large, "dense simulation capped at 12 qubits");
  State psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  const double h = 1.0 / std::numbers::sqrt2;
  for (int q = 0; q < n; ++q) apply_1q(psi, n, q, {cd(h), cd(h), cd(h), cd(-h)});
  for (int layer = 1; layer <= p; ++layer) {
    double gamma = bound(binding, p == 1 ? "gamma" : "gamma_" + std::to_string(layer));
    double beta = bound(binding, p == 1 ? "beta" : "beta_" + std::to_string(layer));
    for (auto [u, v] : g.edges) {
      // exp(-i gamma/2 (1 - Z_u Z_v)) as CNOT, RZ(-gamma), CNOT and a global
      // phase
      apply_cnot(psi, n, u, v);
      apply_1q(psi, n, v, {std::exp(cd(0, gamma / 2)), cd(0), cd(0), std::exp(cd(0, -gamma / 2))});
      apply_cnot(psi, n, u, v);
      for (auto& amp : psi) amp *= std::exp(cd(0, -gamma / 2));
    }
    double c = std::cos(beta / 2), s = std::sin(beta / 2);
    for (int q = 0; q < n; ++q) apply_1q(psi, n, q, {cd(c), cd(0, s), cd(0, s), cd(c)});
  }
  return psi;
}

double statevector_expectation(const ProblemGraph& g, const AnsatzSpec& ansatz,
                               const Binding& binding) {
  State psi = statevector(g, ansatz, binding);
  double total = 0;
  for (std::size_t x = 0; x < psi.size(); ++x)
    total += std::norm(psi[x]) * cut_value(x, g.n, g);
  return total;
}

double statevector_z_expectation(const ProblemGraph& g, const AnsatzSpec& ansatz,
                                 const std::vector<int>& support, const Binding& binding) {
  State psi = statevector(g, ansatz, binding);
  double total = 0;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    int parity = 0;
    for (int q : support) parity ^= bit_of(x, g.n, q);
    total += std::norm(psi[x]) * (parity ? -1.0 : 1.0);
  }
  return total;
}

int brute_force_maxcut(const ProblemGraph& g) {
  if (g.n > 24) raise(Errc::too_large, "brute force capped at 24 vertices");
  if (g.n == 0) return 0;
  int best = 0;
  const std::size_t half = std::size_t{1} << (g.n > 0 ? g.n - 1 : 0);
  for (std::size_t x = 0; x < half; ++x) best = std::max(best, cut_value(x, g.n, g));
  return best;
}

// ---------------------------------------------------------------------------
// soundness

Binding random_binding(const std::set<std::string>& params, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  Binding binding;
  for (const auto& p : params) binding[p] = dist(rng);
  return binding;
}

namespace {

std::set<std::string> lincomb_parameters(const LinComb& lc) {
  std::set<std::string> out;
  for (const auto& t : lc.terms()) {
    auto a = t.coeff.parameters();
    out.insert(a.begin(), a.end());
    auto b = t.diagram.parameters();
    out.insert(b.begin(), b.end());
  }
  return out;
}

ComplexMatrix lincomb_value(const LinComb& lc, const Binding& binding) {
  ComplexMatrix total(std::size_t{1} << lc.n_outputs(), std::size_t{1} << lc.n_inputs());
  for (const auto& t : lc.terms()) {
    cd c = t.coeff.eval(binding);
    ComplexMatrix m = contract_numeric(t.diagram, binding);
    for (std::size_t i = 0; i < total.data.size(); ++i) total.data[i] += c * m.data[i];
  }
  return total;
}

} // namespace

bool soundness_check(const LinComb& before, const LinComb& after, int trials, double tol,
                     std::uint64_t seed) {
  if (before.n_inputs() != after.n_inputs() || before.n_outputs() != after.n_outputs())
    raise(Errc::arity_mismatch, "soundness check requires matching arities");
  std::set<std::string> params = lincomb_parameters(before);
  auto pa = lincomb_parameters(after);
  params.insert(pa.begin(), pa.end());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Binding binding = random_binding(params, rng);
    ComplexMatrix a = lincomb_value(before, binding);
    ComplexMatrix b = lincomb_value(after, binding);
    for (std::size_t i = 0; i < a.data.size(); ++i)
      if (std::abs(a.data[i] - b.data[i]) > tol) return false;
  }
  return true;
}

bool soundness_check(const Diagram& before, const Diagram& after, int trials, double tol,
                     std::uint64_t seed) {
  return soundness_check(LinComb(before), LinComb(after), trials, tol, seed);
}

bool soundness_check(const Diagram& before, const LinComb& after, int trials, double tol,
                     std::uint64_t seed) {
  return soundness_check(LinComb(before), after, trials, tol, seed);
}

} // namespace zxeval::oracle
