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

#include <map>
#include <set>
#include <string>

#include "zxeval/rational.hpp"

namespace zxeval {

/// A named real-valued circuit parameter. Compares by name.
struct Parameter {
  std::string name;

  friend bool operator==(const Parameter& a, const Parameter& b) { return a.name == b.name; }
  friend bool operator<(const Parameter& a, const Parameter& b) { return a.name < b.name; }
};

/// Assignment of parameter names to radian values.
using Binding = std::map<std::string, double>;

/// An angle of the form pi_part*pi + sum_k coeff_k * param_k, with the pi
/// coefficient canonicalized into [0, 2) (angles are taken modulo 2*pi) and no
/// zero parameter coefficients stored.
class LinearPhase {
public:
  LinearPhase() = default;

  static LinearPhase pi_multiple(const Rational& coeff_of_pi);
  static LinearPhase pi() { return pi_multiple(Rational(1)); }
  static LinearPhase parameter(const std::string& name, const Rational& coeff = Rational(1));

  const Rational& pi_part() const { return pi_part_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }

  bool is_zero() const { return rat_is_zero(pi_part_) && terms_.empty(); }
  bool is_constant() const { return terms_.empty(); }
  /// True when the angle is k*pi/2 for integer k (phase of a Clifford spider).
  bool is_half_pi_multiple() const;
  bool is_pi() const { return terms_.empty() && rat_is_integer(pi_part_, 1); }

  LinearPhase operator+(const LinearPhase& o) const;
  LinearPhase operator-(const LinearPhase& o) const;
  LinearPhase negated() const;
  LinearPhase scaled(const Rational& f) const;

  double eval(const Binding& binding) const;
  std::set<std::string> parameters() const;

  friend bool operator==(const LinearPhase& a, const LinearPhase& b) {
    return a.pi_part_ == b.pi_part_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearPhase& a, const LinearPhase& b) { return !(a == b); }
  friend bool operator<(const LinearPhase& a, const LinearPhase& b);

  std::string to_string() const;

private:
  void canonicalize();

  Rational pi_part_{0};
  std::map<std::string, Rational> terms_;
};

} // namespace zxeval
