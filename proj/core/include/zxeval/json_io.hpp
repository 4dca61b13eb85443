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

#include <nlohmann/json.hpp>

#include "zxeval/diagram.hpp"
#include "zxeval/lincomb.hpp"

namespace zxeval {

// Rationals are serialized as "p/q" strings so round trips are bit exact.
// Schema sketches:
//   LinearPhase  {"pi":"p/q","params":{"gamma":"-2/1",...}}
//   ScalarExpr   {"monomials":[{"re":"p/q","im":"p/q","sqrt2":k,
//                               "atoms":[{"fn":"cos"|"sin","arg":{...}}]}]}
//   Diagram      {"vertices":[{"id":n,"kind":"Z"|"X"|"in"|"out","phase":{...}?}],
//                 "edges":[[a,b],...], "inputs":[...], "outputs":[...],
//                 "scalar":{...}, "params":[...]}
//   LinComb      {"arity":[m,n],"terms":[{"coeff":{...},"diagram":{...}}]}
// Edge order is non-semantic; the serializer sorts for determinism. A JSON
// edge joining two boundaries (a bare wire) is normalized through a Z(0)
// spider on load. Schema violations raise Errc::schema_violation with the
// offending JSON path in the message.

nlohmann::json to_json(const LinearPhase& p);
LinearPhase linear_phase_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScalarExpr& e);
ScalarExpr scalar_expr_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinComb& lc);
LinComb lincomb_from_json(const nlohmann::json& j);

} // namespace zxeval
