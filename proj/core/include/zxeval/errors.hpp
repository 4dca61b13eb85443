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

#include <stdexcept>
#include <string>

namespace zxeval {

enum class Errc {
  dangling_wire,
  boundary_degree_violation,
  arity_mismatch,
  region_arity_mismatch,
  schema_violation,
  stale_match,
  not_a_gadget,
  not_decomposable,
  not_closed,
  unsupported_phase,
  term_budget_exceeded,
  missing_binding,
  too_large,
  spec_mismatch,
  edge_not_in_graph,
  support_out_of_range,
  malformed_input,
};

/// Library-wide exception. The code discriminates the failure class so that
/// callers (in particular the CLI) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace zxeval
