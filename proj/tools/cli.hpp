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

#include <iosfwd>
#include <string>
#include <vector>

namespace zxeval::cli {

/// Runs the command line surface. Exit codes: 0 success, 1 usage error,
/// 2 malformed input file, 3 evaluation budget or size exceeded,
/// 4 certification mismatch. Errors are written to `err` with a
/// machine-parsable "E<code>:" prefix.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an angle literal: a decimal number or a rational multiple of pi
/// such as "pi", "-pi/2", "3pi/4", "2pi".
double parse_angle(const std::string& text);

} // namespace zxeval::cli
