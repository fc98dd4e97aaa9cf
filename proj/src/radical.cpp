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
#include "nilsol/radical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nilsol {

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("squarefree_split needs a positive integer");
  Integer outside = 1;
  Integer core = 1;
  Integer rem = n;
  for (unsigned long d = 2;; d += (d == 2 ? 1 : 2)) {
    if (mpz_perfect_square_p(rem.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
      outside *= r;
      return {outside, core};
    }
    if (Integer(d) * d > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), d);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside *= d;
    if (e % 2 == 1) core *= d;
  }
  // rem is 1 or a prime
  core *= rem;
  return {outside, core};
}

SignedSqrt::SignedSqrt(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw std::invalid_argument("negative radicand");
  if (sign_ > 1 || sign_ < -1) throw std::invalid_argument("sign must be -1, 0 or +1");
  if (radicand_.is_zero()) sign_ = 0;
  if (sign_ == 0) radicand_ = Rational(0);
}

SignedSqrt SignedSqrt::from_rational(const Rational& x) { return SignedSqrt(x.sign(), x * x); }

namespace {

bool perfect_square_rational(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  const Integer num = r.num();
  const Integer den = r.den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer a;
  Integer b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  *root = Rational(a, b);
  return true;
}

}  // namespace

std::string SignedSqrt::str() const {
  if (sign_ == 0) return "0";
  Rational root;
  const std::string prefix = sign_ < 0 ? "-" : "";
  if (perfect_square_rational(radicand_, &root)) return prefix + root.str();
  return prefix + "sqrt(" + radicand_.str() + ")";
}

RadicalSum::RadicalSum(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Integer(1), r);
}

RadicalSum RadicalSum::term(const Integer& s, const Rational& c) {
  RadicalSum out;
  out.add_term(s, c);
  return out;
}

void RadicalSum::add_term(const Integer& s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalSum::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coef] : terms_) coef *= c;
  return *this;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  out *= Rational(-1);
  return out;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& [s1, c1] : a.terms_) {
    for (const auto& [s2, c2] : b.terms_) {
      // sqrt(s1) sqrt(s2) = g sqrt((s1/g)(s2/g)) for squarefree s1, s2
      Integer g;
      mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), s2.get_mpz_t());
      const Integer key = (s1 / g) * (s2 / g);
      out.add_term(key, c1 * c2 * Rational(g));
    }
  }
  return out;
}

double RadicalSum::approx() const {
  double acc = 0.0;
  for (const auto& [s, c] : terms_) acc += c.to_double() * std::sqrt(s.get_d());
  return acc;
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (s == 1) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << "sqrt(" << s.get_str() << ')';
    }
    first = false;
  }
  return os.str();
}

RadicalSum sqrt_to_radical(const SignedSqrt& x) {
  if (x.is_zero()) return {};
  // sqrt(p/q) = sqrt(p*q) / q
  const Rational& r = x.radicand();
  const auto [outside, core] = squarefree_split(r.num() * r.den());
  return RadicalSum::term(core, Rational(outside, r.den()) * Rational(x.sign()));
}

RadicalSum radical_mul(const SignedSqrt& a, const SignedSqrt& b) {
  return sqrt_to_radical(SignedSqrt(a.sign() * b.sign(), a.radicand() * b.radicand()));
}

}  // namespace nilsol
