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
#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "nilsol/radical.hpp"
#include "nilsol/rational.hpp"

using namespace nilsol;

TEST_CASE("rational normalization and text") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational::parse("-33/2") == Rational(-33, 2));
  CHECK(Rational::parse("143") == Rational(143));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS(Rational(0).inverse());
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  auto pick = [&] {
    long q = 0;
    while (q == 0) q = d(rng);
    return Rational(d(rng), q);
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = pick(), b = pick(), c = pick();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("content gives the primitive integer vector") {
  const RationalVector v{Rational(22, 3), Rational(12), Rational(22, 3), Rational(10)};
  const auto c = content(v);
  CHECK(c == Rational(2, 3));
  RationalVector p;
  for (const auto& x : v) p.push_back(x / c);
  CHECK(p == RationalVector{11, 18, 11, 15});
}

TEST_CASE("squarefree split") {
  CHECK(squarefree_split(72) == std::pair<Integer, Integer>(6, 2));
  CHECK(squarefree_split(1) == std::pair<Integer, Integer>(1, 1));
  CHECK(squarefree_split(30) == std::pair<Integer, Integer>(1, 30));
  CHECK(squarefree_split(49) == std::pair<Integer, Integer>(7, 1));
  for (int n = 1; n <= 3000; ++n) {
    const auto [o, c] = squarefree_split(n);
    CHECK(o * o * c == n);
    for (int p = 2; p * p <= c; ++p) CHECK(c % (p * p) != 0);
  }
}

TEST_CASE("signed square roots print exactly") {
  CHECK(SignedSqrt(1, Rational(22)).str() == "sqrt(22)");
  CHECK(SignedSqrt(1, Rational(36)).str() == "6");
  CHECK(SignedSqrt(-1, Rational(9, 4)).str() == "-3/2");
  CHECK(SignedSqrt(-1, Rational(3, 2)).str() == "-sqrt(3/2)");
  CHECK(SignedSqrt(1, Rational(0)).is_zero());
  CHECK(SignedSqrt::from_rational(Rational(-5)) == SignedSqrt(-1, Rational(25)));
  CHECK_THROWS(SignedSqrt(1, Rational(-1)));
}

TEST_CASE("radical sums reduce to squarefree radicands") {
  const auto r8 = sqrt_to_radical(SignedSqrt(1, Rational(8)));
  CHECK(r8 == RadicalSum::term(2, Rational(2)));
  CHECK(sqrt_to_radical(SignedSqrt(1, Rational(1, 2))) == RadicalSum::term(2, Rational(1, 2)));
  CHECK(radical_mul(SignedSqrt(1, Rational(2)), SignedSqrt(1, Rational(2))) == RadicalSum(Rational(2)));
  CHECK(radical_mul(SignedSqrt(1, Rational(2)), SignedSqrt(-1, Rational(3))) == RadicalSum::term(6, Rational(-1)));
  const auto z = sqrt_to_radical(SignedSqrt(1, Rational(2))) + r8 - RadicalSum::term(2, Rational(3));
  CHECK(radical_sum_is_zero(z));
  CHECK((RadicalSum(Rational(21)) * Rational(1) + RadicalSum::term(2, Rational(-4))).str() == "21 - 4*sqrt(2)");
}

TEST_CASE("radical arithmetic matches floating point and ring laws") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> r(1, 40), c(-6, 6);
  auto pick = [&] {
    RadicalSum s;
    for (int k = 0; k < 3; ++k) s += sqrt_to_radical(SignedSqrt(c(rng) < 0 ? -1 : 1, Rational(r(rng)))) * Rational(c(rng));
    return s;
  };
  for (int i = 0; i < 300; ++i) {
    const auto a = pick(), b = pick(), d = pick();
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK((a * b).approx() == doctest::Approx(a.approx() * b.approx()).epsilon(1e-9));
    CHECK((a - a).is_zero());
  }
}
