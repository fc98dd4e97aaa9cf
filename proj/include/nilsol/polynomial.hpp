/*
 * Copyright 2026 The nilsol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilsol/rational.hpp"

namespace nilsol {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i. The zero
/// polynomial has no coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(RationalVector coeffs);
  explicit UPoly(const Rational& c) : UPoly(RationalVector{c}) {}
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RationalVector& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  RationalVector c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws std::logic_error when the remainder is nonzero.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);

/// Scaled to integer coefficients with content 1 and positive leading term.
std::vector<Integer> primitive_integer(const UPoly& f);

/// Real root isolated in (lo, hi], or exactly known when exact is set
/// (then lo == hi is the root).
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// Isolating intervals for all distinct real roots of f, ascending.
/// Rational roots are always returned exact.
std::vector<RootInterval> real_roots(const UPoly& f);

/// Number of distinct real roots in (a, b].
int count_roots(const UPoly& f, const Rational& a, const Rational& b);

/// Simplest rational (smallest denominator) in the closed interval [a, b].
Rational simplest_rational(const Rational& a, const Rational& b);

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  using Monomial = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  /// c0 + sum_i form[i + 1] * x_i.
  static MPoly affine(const RationalVector& form);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;
  int degree_in(std::size_t var) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  Rational eval(const RationalVector& x) const;

  /// Requires nvars() == 1.
  UPoly to_univariate() const;

  /// Substitutes x_var = value, leaving the variable count unchanged.
  MPoly substitute(std::size_t var, const Rational& value) const;

  /// Coefficients in x_var as polynomials in x_other (requires nvars() == 2).
  std::vector<UPoly> as_poly_in(std::size_t var) const;

  /// Equal to c * o for some rational c (c may be zero only if both are).
  bool proportional_to(const MPoly& o) const;

  std::string str() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> t_;
};

/// Resultant with respect to x_var of two bivariate polynomials, as a
/// polynomial in the other variable.
UPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);

}  // namespace nilsol
