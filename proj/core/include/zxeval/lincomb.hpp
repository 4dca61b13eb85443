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

#include <vector>

#include "zxeval/diagram.hpp"

namespace zxeval {

/// One weighted summand of a formal linear combination.
struct Term {
  ScalarExpr coeff;
  Diagram diagram;
};

/// Formal sum of arity-matched diagrams with ScalarExpr coefficients. The
/// semantics is sum_i coeff_i * value(diagram_i).
class LinComb {
public:
  LinComb(std::size_t n_inputs, std::size_t n_outputs)
      : n_inputs_(n_inputs), n_outputs_(n_outputs) {}

  /// Single-term combination with coefficient 1.
  explicit LinComb(const Diagram& d);

  std::size_t n_inputs() const { return n_inputs_; }
  std::size_t n_outputs() const { return n_outputs_; }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(ScalarExpr coeff, Diagram d);

private:
  std::size_t n_inputs_;
  std::size_t n_outputs_;
  std::vector<Term> terms_;
};

/// Splits the degree-2 spider `site` (whose phase must carry a parameter)
/// into the two-term Clifford combination, returning full copies of `host`
/// with the spider replaced by a plain wire respectively a pi spider of the
/// same color. Oracle-equal to `host`. Uses
///   Z(t) = e^{i t/2} ( cos(-t/2) I + i sin(-t/2) Z(pi) )
/// and its color dual.
LinComb decompose_z_rotation(const Diagram& host, VertexId site);
LinComb decompose_x_rotation(const Diagram& host, VertexId site);

/// Splits a recognized phase gadget (X hub `hub` of degree k+1 with a
/// degree-1 Z phase hub and k leg spiders) into
///   sqrt2^{1-k} e^{i t/2} ( cos(-t/2) [legs as wires] + i sin(-t/2) [Z(pi) on
///   every leg] )
/// where t is the hub phase. The phase must carry a parameter.
LinComb decompose_phase_gadget(const Diagram& host, VertexId hub);

/// Replaces the subdiagram induced by `region` with each term of
/// `replacement`. The edges crossing the region boundary, ordered by
/// (outside endpoint, inside endpoint), are matched against the replacement's
/// inputs followed by its outputs.
LinComb substitute(const Diagram& host, const std::vector<VertexId>& region,
                   const LinComb& replacement);

/// Termwise composition: |a|*|b| terms, term (i,j) has coefficient a_i*b_j
/// and diagram compose(d_i, e_j).
LinComb product(const LinComb& a, const LinComb& b);

/// Drops zero-coefficient terms, hoists each term diagram's global scalar
/// into its coefficient, and merges structurally identical diagrams (up to
/// the deterministic relabeling; merging is sound but not
/// isomorphism-complete).
LinComb canonicalize(const LinComb& lc);

/// Exactly contracts a closed (0,0) combination into one ScalarExpr.
ScalarExpr collapse_closed(const LinComb& lc);

} // namespace zxeval
