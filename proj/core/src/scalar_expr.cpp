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

#include "zxeval/scalar_expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

namespace zxeval {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// floor of a rational as an integer
long long rational_floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

Rational pow2_rational(int k) {
  Rational r(1);
  for (int i = 0; i < std::abs(k); ++i) r *= Rational(2);
  if (k < 0) return Rational(1) / r;
  return r;
}

} // namespace

// ---------------------------------------------------------------------------
// rational strings

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator() << "/" << r.denominator();
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&] { raise(Errc::schema_violation, "malformed rational '" + s + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      long long num = std::stoll(s, &pos);
      if (pos != s.size()) bad();
      return Rational(num);
    }
    std::size_t pos = 0;
    long long num = std::stoll(s.substr(0, slash), &pos);
    if (pos != slash) bad();
    long long den = std::stoll(s.substr(slash + 1), &pos);
    if (pos != s.size() - slash - 1 || den == 0) bad();
    return Rational(num, den);
  } catch (const std::logic_error&) {
    bad();
  }
  return Rational(0); // unreachable
}

// ---------------------------------------------------------------------------
// LinearPhase

void LinearPhase::canonicalize() {
  // pi coefficient modulo 2 into [0, 2)
  long long shift = rational_floor(pi_part_ / Rational(2));
  pi_part_ -= Rational(2) * Rational(shift);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (rat_is_zero(it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

LinearPhase LinearPhase::pi_multiple(const Rational& coeff_of_pi) {
  LinearPhase p;
  p.pi_part_ = coeff_of_pi;
  p.canonicalize();
  return p;
}

LinearPhase LinearPhase::parameter(const std::string& name, const Rational& coeff) {
  LinearPhase p;
  if (name.empty()) raise(Errc::schema_violation, "parameter name must be nonempty");
  p.terms_[name] = coeff;
  p.canonicalize();
  return p;
}

bool LinearPhase::is_half_pi_multiple() const {
  return terms_.empty() && (pi_part_.denominator() == 1 || pi_part_.denominator() == 2);
}

LinearPhase LinearPhase::operator+(const LinearPhase& o) const {
  LinearPhase p = *this;
  p.pi_part_ += o.pi_part_;
  for (const auto& [name, c] : o.terms_) p.terms_[name] += c;
  p.canonicalize();
  return p;
}

LinearPhase LinearPhase::operator-(const LinearPhase& o) const { return *this + o.negated(); }

LinearPhase LinearPhase::negated() const { return scaled(Rational(-1)); }

LinearPhase LinearPhase::scaled(const Rational& f) const {
  LinearPhase p;
  p.pi_part_ = pi_part_ * f;
  for (const auto& [name, c] : terms_) p.terms_[name] = c * f;
  p.canonicalize();
  return p;
}

double LinearPhase::eval(const Binding& binding) const {
  double v = to_double(pi_part_) * std::numbers::pi;
  for (const auto& [name, c] : terms_) {
    auto it = binding.find(name);
    if (it == binding.end()) raise(Errc::missing_binding, "no binding for parameter '" + name + "'");
    v += to_double(c) * it->second;
  }
  return v;
}

std::set<std::string> LinearPhase::parameters() const {
  std::set<std::string> out;
  for (const auto& [name, c] : terms_) out.insert(name);
  return out;
}

bool operator<(const LinearPhase& a, const LinearPhase& b) {
  if (a.pi_part_ != b.pi_part_) return a.pi_part_ < b.pi_part_;
  return a.terms_ < b.terms_;
}

std::string LinearPhase::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Rational& c, const std::string& sym) {
    if (rat_is_zero(c)) return;
    Rational a = c;
    if (first) {
      if (rat_is_negative(a)) {
        os << "-";
        a = -a;
      }
    } else {
      os << (rat_is_negative(a) ? " - " : " + ");
      if (rat_is_negative(a)) a = -a;
    }
    if (!rat_is_integer(a, 1)) {
      os << a.numerator();
      if (a.denominator() != 1) os << "/" << a.denominator();
      os << "*";
    }
    os << sym;
    first = false;
  };
  put(pi_part_, "pi");
  for (const auto& [name, c] : terms_) put(c, name);
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// atoms

namespace {

struct NormalizedAtom {
  GaussianRational factor{Rational(1)};
  int sqrt2_exp = 0;
  std::optional<Atom> atom;
};

/// Canonicalizes cos/sin(arg) as described on Atom; returns a scalar factor
/// together with an optional surviving atom.
NormalizedAtom normalize_atom(Atom::Fn fn, LinearPhase arg) {
  NormalizedAtom out;
  // sign-normalize parameter part: cos(-x) = cos(x), sin(-x) = -sin(x)
  if (!arg.terms().empty() && rat_is_negative(arg.terms().begin()->second)) {
    arg = arg.negated();
    if (fn == Atom::Fn::sin) out.factor = -out.factor;
  }
  // fold pi shifts: cos(x+pi) = -cos(x), sin(x+pi) = -sin(x)
  while (!rat_is_negative(arg.pi_part() - Rational(1))) {
    arg = arg - LinearPhase::pi();
    out.factor = -out.factor;
  }
  // fold half-pi shift: cos(x+pi/2) = -sin(x), sin(x+pi/2) = cos(x)
  if (arg.pi_part() >= Rational(1, 2)) {
    arg = arg - LinearPhase::pi_multiple(Rational(1, 2));
    if (fn == Atom::Fn::cos) {
      fn = Atom::Fn::sin;
      out.factor = -out.factor;
    } else {
      fn = Atom::Fn::cos;
    }
  }
  if (arg.is_constant()) {
    // remaining pi coefficient lies in [0, 1/2)
    if (rat_is_zero(arg.pi_part())) {
      if (fn == Atom::Fn::sin) out.factor = GaussianRational(Rational(0));
      return out; // cos(0) = 1, sin(0) = 0
    }
    if (arg.pi_part() == Rational(1, 4)) {
      out.sqrt2_exp -= 1; // cos(pi/4) = sin(pi/4) = 1/sqrt(2)
      return out;
    }
  }
  out.atom = Atom{fn, arg};
  return out;
}

void fold_sqrt2(Monomial& m) {
  // keep sqrt2_exp in {0, 1}
  long long q = floor_div(m.sqrt2_exp, 2);
  m.sqrt2_exp -= static_cast<int>(2 * q);
  m.coeff = m.coeff * GaussianRational(pow2_rational(static_cast<int>(q)));
}

bool monomial_key_less(const Monomial& a, const Monomial& b) {
  if (a.sqrt2_exp != b.sqrt2_exp) return a.sqrt2_exp < b.sqrt2_exp;
  return a.atoms < b.atoms;
}

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.coeff = a.coeff * b.coeff;
  m.sqrt2_exp = a.sqrt2_exp + b.sqrt2_exp;
  m.atoms = a.atoms;
  m.atoms.insert(m.atoms.end(), b.atoms.begin(), b.atoms.end());
  std::sort(m.atoms.begin(), m.atoms.end());
  fold_sqrt2(m);
  return m;
}

} // namespace

// ---------------------------------------------------------------------------
// ScalarExpr

ScalarExpr ScalarExpr::from_monomials(std::vector<Monomial> ms) {
  for (auto& m : ms) fold_sqrt2(m);
  std::sort(ms.begin(), ms.end(), monomial_key_less);
  ScalarExpr e;
  for (auto& m : ms) {
    if (m.coeff.is_zero()) continue;
    if (!e.monomials_.empty() && e.monomials_.back().sqrt2_exp == m.sqrt2_exp &&
        e.monomials_.back().atoms == m.atoms) {
      e.monomials_.back().coeff = e.monomials_.back().coeff + m.coeff;
      if (e.monomials_.back().coeff.is_zero()) e.monomials_.pop_back();
    } else {
      e.monomials_.push_back(std::move(m));
    }
  }
  return e;
}

ScalarExpr ScalarExpr::constant(const GaussianRational& c) {
  return from_monomials({Monomial{c, 0, {}}});
}

ScalarExpr ScalarExpr::sqrt2_pow(int k) {
  return from_monomials({Monomial{GaussianRational(Rational(1)), k, {}}});
}

ScalarExpr ScalarExpr::cos(const LinearPhase& arg) {
  NormalizedAtom n = normalize_atom(Atom::Fn::cos, arg);
  Monomial m{n.factor, n.sqrt2_exp, {}};
  if (n.atom) m.atoms.push_back(*n.atom);
  return from_monomials({std::move(m)});
}

ScalarExpr ScalarExpr::sin(const LinearPhase& arg) {
  NormalizedAtom n = normalize_atom(Atom::Fn::sin, arg);
  Monomial m{n.factor, n.sqrt2_exp, {}};
  if (n.atom) m.atoms.push_back(*n.atom);
  return from_monomials({std::move(m)});
}

ScalarExpr ScalarExpr::exp_i(const LinearPhase& arg) {
  return cos(arg) + unit_i() * sin(arg);
}

ScalarExpr ScalarExpr::conj() const {
  std::vector<Monomial> ms = monomials_;
  for (auto& m : ms) m.coeff = m.coeff.conj();
  return from_monomials(std::move(ms));
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  std::vector<Monomial> ms = a.monomials_;
  ms.insert(ms.end(), b.monomials_.begin(), b.monomials_.end());
  return ScalarExpr::from_monomials(std::move(ms));
}

ScalarExpr operator-(const ScalarExpr& a) {
  std::vector<Monomial> ms = a.monomials_;
  for (auto& m : ms) m.coeff = -m.coeff;
  return ScalarExpr::from_monomials(std::move(ms));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.monomials_.size() * b.monomials_.size());
  for (const auto& ma : a.monomials_)
    for (const auto& mb : b.monomials_) ms.push_back(mul_monomials(ma, mb));
  return ScalarExpr::from_monomials(std::move(ms));
}

std::complex<double> ScalarExpr::eval(const Binding& binding) const {
  std::complex<double> total = 0;
  const double sqrt2 = std::numbers::sqrt2;
  for (const auto& m : monomials_) {
    std::complex<double> v = m.coeff.to_complex();
    v *= std::pow(sqrt2, m.sqrt2_exp);
    for (const auto& a : m.atoms) {
      double x = a.arg.eval(binding);
      v *= (a.fn == Atom::Fn::cos) ? std::cos(x) : std::sin(x);
    }
    total += v;
  }
  return total;
}

std::set<std::string> ScalarExpr::parameters() const {
  std::set<std::string> out;
  for (const auto& m : monomials_)
    for (const auto& a : m.atoms) {
      auto p = a.arg.parameters();
      out.insert(p.begin(), p.end());
    }
  return out;
}

ScalarExpr simplify(const ScalarExpr& e) {
  std::vector<Monomial> ms = e.monomials_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ms.size() && !changed; ++i) {
      // look for a cos^2(L) factor in ms[i] and a partner with sin^2(L)
      const Monomial& mi = ms[i];
      for (std::size_t ai = 0; ai + 1 < mi.atoms.size() && !changed; ++ai) {
        const Atom& a = mi.atoms[ai];
        if (a.fn != Atom::Fn::cos || !(mi.atoms[ai + 1] == a)) continue;
        Monomial partner = mi;
        partner.atoms[ai].fn = Atom::Fn::sin;
        partner.atoms[ai + 1].fn = Atom::Fn::sin;
        std::sort(partner.atoms.begin(), partner.atoms.end());
        for (std::size_t j = 0; j < ms.size(); ++j) {
          if (j == i) continue;
          if (ms[j].sqrt2_exp == partner.sqrt2_exp && ms[j].atoms == partner.atoms &&
              ms[j].coeff == mi.coeff) {
            Monomial merged = mi;
            merged.atoms.erase(merged.atoms.begin() + static_cast<long>(ai),
                               merged.atoms.begin() + static_cast<long>(ai) + 2);
            std::size_t hi = std::max(i, j), lo = std::min(i, j);
            ms.erase(ms.begin() + static_cast<long>(hi));
            ms.erase(ms.begin() + static_cast<long>(lo));
            ms.push_back(std::move(merged));
            changed = true;
            break;
          }
        }
      }
    }
  }
  return ScalarExpr::from_monomials(std::move(ms));
}

bool equiv_numeric(const ScalarExpr& a, const ScalarExpr& b, int trials, double tol,
                   std::uint64_t seed) {
  std::set<std::string> params = a.parameters();
  auto pb = b.parameters();
  params.insert(pb.begin(), pb.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < trials; ++t) {
    Binding binding;
    for (const auto& p : params) binding[p] = dist(rng);
    if (std::abs(a.eval(binding) - b.eval(binding)) > tol) return false;
  }
  return true;
}

namespace {
std::string gaussian_to_string(const GaussianRational& c) {
  auto rat = [](const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
  };
  if (rat_is_zero(c.im)) return rat(c.re);
  if (rat_is_zero(c.re)) {
    if (rat_is_integer(c.im, 1)) return "i";
    if (rat_is_integer(c.im, -1)) return "-i";
    return rat(c.im) + "*i";
  }
  std::string im = rat_is_integer(c.im, 1) ? "i"
                   : (rat_is_integer(c.im, -1) ? "-i" : rat(c.im) + "*i");
  if (!im.empty() && im[0] != '-') im = "+" + im;
  return "(" + rat(c.re) + im + ")";
}
} // namespace

std::string ScalarExpr::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials_) {
    std::string coeff = gaussian_to_string(m.coeff);
    bool neg = false;
    if (coeff.size() > 1 && coeff[0] == '-') {
      neg = true;
      coeff = coeff.substr(1);
    } else if (coeff == "-i") {
      neg = true;
      coeff = "i";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> factors;
    bool unit = (coeff == "1");
    if (!unit) factors.push_back(coeff);
    if (m.sqrt2_exp == 1) factors.push_back("sqrt2");
    for (const auto& a : m.atoms)
      factors.push_back((a.fn == Atom::Fn::cos ? "cos(" : "sin(") + a.arg.to_string() + ")");
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

} // namespace zxeval
