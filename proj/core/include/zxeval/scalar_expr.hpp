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
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zxeval/linear_phase.hpp"
#include "zxeval/rational.hpp"

namespace zxeval {

/// cos(arg) or sin(arg) over a LinearPhase argument.
///
/// Atoms are kept in a canonical form: the argument's pi part lies in
/// [0, 1/2) (shifts by pi and pi/2 are folded into the monomial coefficient
/// and the cos/sin kind), and for parameter-carrying arguments the leading
/// parameter coefficient is positive (cos is even, sin odd). Constant
/// arguments whose value lies in Q[i, sqrt2] are folded away entirely.
struct Atom {
  enum class Fn : std::uint8_t { cos, sin };

  Fn fn;
  LinearPhase arg;

  friend bool operator==(const Atom& a, const Atom& b) { return a.fn == b.fn && a.arg == b.arg; }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.fn != b.fn) return a.fn < b.fn;
    return a.arg < b.arg;
  }
};

/// coeff * sqrt(2)^sqrt2_exp * prod(atoms); sqrt2_exp is canonicalized into
/// {0, 1} by folding (sqrt2)^2 = 2 into the coefficient.
struct Monomial {
  GaussianRational coeff;
  int sqrt2_exp = 0;
  std::vector<Atom> atoms; // sorted

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.sqrt2_exp == b.sqrt2_exp && a.atoms == b.atoms;
  }
};

/// Exact symbolic complex scalar: a sum of monomials over cos/sin atoms with
/// Gaussian-rational coefficients and explicit sqrt(2) powers. Values are
/// immutable and kept canonical (like monomials merged, zero terms dropped,
/// deterministic ordering), so structural equality is insertion-order
/// independent.
class ScalarExpr {
public:
  ScalarExpr() = default; // zero

  static ScalarExpr zero() { return {}; }
  static ScalarExpr one() { return constant(GaussianRational(Rational(1))); }
  static ScalarExpr unit_i() { return constant(GaussianRational::unit_i()); }
  static ScalarExpr constant(const GaussianRational& c);
  static ScalarExpr rational(const Rational& r) { return constant(GaussianRational(r)); }
  static ScalarExpr integer(long long n) { return rational(Rational(n)); }
  /// sqrt(2)^k for any integer k (negative allowed).
  static ScalarExpr sqrt2_pow(int k);
  static ScalarExpr cos(const LinearPhase& arg);
  static ScalarExpr sin(const LinearPhase& arg);
  /// e^{i*arg} = cos(arg) + i*sin(arg); constant arguments in (pi/4)Z collapse
  /// to an exact atom-free value.
  static ScalarExpr exp_i(const LinearPhase& arg);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  ScalarExpr conj() const;

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
  ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

  /// Throws Errc::missing_binding when a parameter of the expression is absent.
  std::complex<double> eval(const Binding& binding) const;
  std::set<std::string> parameters() const;

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return a.monomials_ == b.monomials_;
  }
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

  std::string to_string() const;

private:
  friend ScalarExpr simplify(const ScalarExpr& e);
  static ScalarExpr from_monomials(std::vector<Monomial> ms);

  std::vector<Monomial> monomials_; // sorted by (sqrt2_exp, atoms)
};

/// Merges like monomials (already canonical) and applies
/// sin^2(L) + cos^2(L) -> 1 between monomial pairs that differ only by that
/// factor pair. Never changes the value.
ScalarExpr simplify(const ScalarExpr& e);

/// Probabilistic equality: evaluates both expressions at `trials` uniform
/// random bindings of all involved parameters over [0, 2*pi) and compares to
/// tolerance `tol`. Seeded and reproducible.
bool equiv_numeric(const ScalarExpr& a, const ScalarExpr& b, int trials = 32, double tol = 1e-9,
                   std::uint64_t seed = 0x5eedULL);

} // namespace zxeval
