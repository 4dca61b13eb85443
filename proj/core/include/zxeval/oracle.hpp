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

#include <complex>
#include <random>
#include <vector>

#include "zxeval/ansatz.hpp"
#include "zxeval/lincomb.hpp"

// Independent numeric ground truth. Nothing in this header touches the
// rewrite engine or the exact contractor; the statevector path simulates the
// reference gate sequences directly.

namespace zxeval::oracle {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Numeric contraction of an arbitrary diagram with parameters bound. Closed
/// diagrams yield a 1x1 matrix; open diagrams the 2^|out| x 2^|in| matrix
/// (boundary k is bit n-1-k of the index, i.e. the first-listed boundary is
/// the most significant bit). Throws too_large beyond the enumeration caps
/// and missing_binding for unbound parameters.
ComplexMatrix contract_numeric(const Diagram& d, const Binding& binding);

/// Convenience for closed diagrams.
std::complex<double> contract_numeric_closed(const Diagram& d, const Binding& binding);

/// Reference statevector of the ansatz circuit, global scalar included
/// (amplitude of basis state x; qubit q is bit n-1-q of x).
std::vector<std::complex<double>> statevector(const ProblemGraph& g, const AnsatzSpec& ansatz,
                                              const Binding& binding);

/// Layered-state statevector with the phase separation compiled to the
/// CNOT-RZ-CNOT gate sequence instead of the diagonal fast path; agrees with
/// statevector() to machine precision.
std::vector<std::complex<double>> statevector_qaoa_gates(const ProblemGraph& g, int p,
                                                         const Binding& binding);

/// <C> for the MaxCut Hamiltonian C = |E|/2 - 1/2 sum Z_u Z_v.
double statevector_expectation(const ProblemGraph& g, const AnsatzSpec& ansatz,
                               const Binding& binding);

/// <prod_{q in support} Z_q> on the ansatz state.
double statevector_z_expectation(const ProblemGraph& g, const AnsatzSpec& ansatz,
                                 const std::vector<int>& support, const Binding& binding);

/// Exact maximum cut over all bipartitions (n <= 24).
int brute_force_maxcut(const ProblemGraph& g);

/// True iff the two objects agree numerically at `trials` random bindings of
/// their parameters, comparing matrices entrywise within tol.
bool soundness_check(const Diagram& before, const Diagram& after, int trials = 16,
                     double tol = 1e-9, std::uint64_t seed = kDefaultSeed);
bool soundness_check(const LinComb& before, const LinComb& after, int trials = 16,
                     double tol = 1e-9, std::uint64_t seed = kDefaultSeed);
bool soundness_check(const Diagram& before, const LinComb& after, int trials = 16,
                     double tol = 1e-9, std::uint64_t seed = kDefaultSeed);

/// Uniform random binding over [0, 2*pi) per parameter (sorted name order).
Binding random_binding(const std::set<std::string>& params, std::mt19937_64& rng);

} // namespace zxeval::oracle
