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
#include <string>
#include <utility>

#include "nilsol/rational.hpp"

namespace nilsol {

/// Splits a positive integer as outside^2 * core with core squarefree.
/// Trial division; fine for the radicands that occur at n <= 9.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

/// A real number sign * sqrt(radicand) with radicand >= 0 rational.
/// sign == 0 exactly when radicand == 0.
class SignedSqrt {
 public:
  SignedSqrt() = default;
  SignedSqrt(int sign, Rational radicand);

  /// The rational value x written as sign(x) * sqrt(x^2).
  static SignedSqrt from_rational(const Rational& x);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  SignedSqrt negated() const { return SignedSqrt(-sign_, radicand_); }

  /// Square of the represented value (the radicand).
  const Rational& square() const { return radicand_; }

  /// "sqrt(p/q)" unless the radicand is a perfect rational square, in which
  /// case the exact rational. Negative values carry a leading '-'.
  std::string str() const;

  friend bool operator==(const SignedSqrt&, const SignedSqrt&) = default;

 private:
  int sign_ = 0;
  Rational radicand_;
};

/// Finite sum  sum_s c_s * sqrt(s)  over squarefree positive integers s.
/// Zero coefficients are never stored, so the zero value is the empty map.
class RadicalSum {
 public:
  using Terms = std::map<Integer, Rational>;

  RadicalSum() = default;
  explicit RadicalSum(const Rational& r);

  /// c * sqrt(s); s must be squarefree and positive.
  static RadicalSum term(const Integer& s, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Rational part (coefficient of sqrt(1)) if that is the only term.
  bool is_rational() const;
  Rational rational_part() const;

  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const Rational& c);
  RadicalSum operator-() const;

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& c) { return a *= c; }
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

  double approx() const;
  std::string str() const;

 private:
  void add_term(const Integer& s, const Rational& c);
  Terms terms_;
};

RadicalSum sqrt_to_radical(const SignedSqrt& x);
RadicalSum radical_mul(const SignedSqrt& a, const SignedSqrt& b);

/// Exact zero test. Relies on linear independence over Q of square roots of
/// distinct squarefree integers, so it reduces to emptiness of the term map.
inline bool radical_sum_is_zero(const RadicalSum& x) { return x.is_zero(); }

}  // namespace nilsol
