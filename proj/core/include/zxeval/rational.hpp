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

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <string>

#include "zxeval/errors.hpp"

namespace zxeval {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// boost::rational's heterogeneous comparison operators self-recurse for some
// argument types; compare through these helpers (denominators are positive
// after normalization).
inline bool rat_is_zero(const Rational& r) { return r.numerator() == 0; }
inline bool rat_is_negative(const Rational& r) { return r.numerator() < 0; }
inline bool rat_is_integer(const Rational& r, long long n) {
  return r.denominator() == 1 && r.numerator() == n;
}

/// "p/q" with normalized sign on the numerator; plain "p" accepted on parse.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// Exact complex number a + b*i with rational a, b.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return rat_is_zero(re) && rat_is_zero(im); }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

} // namespace zxeval
