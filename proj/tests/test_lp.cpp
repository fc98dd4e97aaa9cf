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

#include <random>

#include "nilsol/lp.hpp"

using namespace nilsol;

namespace {

/// max c.x over {A x <= b, x >= 0} in two variables by vertex enumeration.
std::optional<Rational> vertex_max(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  std::vector<std::array<Rational, 3>> lines;  // p x + q y = r
  for (std::size_t i = 0; i < a.rows(); ++i) lines.push_back({a(i, 0), a(i, 1), b[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& l1 = lines[i];
      const auto& l2 = lines[j];
      const Rational det = l1[0] * l2[1] - l1[1] * l2[0];
      if (det.is_zero()) continue;
      const Rational x = (l1[2] * l2[1] - l1[1] * l2[2]) / det;
      const Rational y = (l1[0] * l2[2] - l1[2] * l2[0]) / det;
      if (x.sign() < 0 || y.sign() < 0) continue;
      bool ok = true;
      for (std::size_t r = 0; r < a.rows(); ++r) ok = ok && a(r, 0) * x + a(r, 1) * y <= b[r];
      if (!ok) continue;
      const Rational v = c[0] * x + c[1] * y;
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("simplex on a textbook problem") {
  RationalMatrix a(3, 2);
  a(0, 0) = 1; a(0, 1) = 0;
  a(1, 0) = 0; a(1, 1) = 2;
  a(2, 0) = 3; a(2, 1) = 2;
  const auto r = simplex_max(a, {4, 12, 18}, {3, 5});
  CHECK(r.bounded);
  CHECK(r.value == Rational(36));
  CHECK(r.x == RationalVector{2, 6});
}

TEST_CASE("simplex matches vertex enumeration on bounded random problems") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-3, 5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t rows = 2 + rng() % 4;
    RationalMatrix a(rows, 2);
    RationalVector b;
    for (std::size_t r = 0; r < rows; ++r) {
      a(r, 0) = d(rng);
      a(r, 1) = d(rng);
      b.emplace_back(static_cast<long>(rng() % 10));
    }
    // a box keeps the problem bounded
    RationalMatrix boxed(rows + 1, 2);
    for (std::size_t r = 0; r < rows; ++r) boxed(r, 0) = a(r, 0), boxed(r, 1) = a(r, 1);
    boxed(rows, 0) = 1;
    boxed(rows, 1) = 1;
    b.emplace_back(20);
    const RationalVector c{d(rng), d(rng)};
    const auto r = simplex_max(boxed, b, c);
    REQUIRE(r.bounded);
    CHECK(r.value == vertex_max(boxed, b, c).value());
  }
}

TEST_CASE("unbounded simplex") {
  RationalMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = -1;
  CHECK_FALSE(simplex_max(a, {1}, {0, 1}).bounded);
}

TEST_CASE("strict positivity: interior point or Farkas certificate") {
  // u > 0 and 1 - u > 0
  auto r = strict_positivity({{0, 1}, {1, -1}}, 1);
  CHECK(r.feasible);
  CHECK(evaluate_form({0, 1}, r.point).sign() > 0);
  CHECK(evaluate_form({1, -1}, r.point).sign() > 0);
  // u > 0 and -u > 0
  r = strict_positivity({{0, 1}, {0, -1}}, 1);
  CHECK_FALSE(r.feasible);
  CHECK(check_farkas({{0, 1}, {0, -1}}, r.farkas));
  // constant forms only
  CHECK(strict_positivity({{2}}, 0).feasible);
  CHECK_FALSE(strict_positivity({{0}}, 0).feasible);

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-4, 4);
  std::size_t feasible = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t dims = 1 + rng() % 3;
    std::vector<AffineForm> forms(2 + rng() % 5);
    for (auto& f : forms)
      for (std::size_t k = 0; k <= dims; ++k) f.emplace_back(d(rng));
    const auto res = strict_positivity(forms, dims);
    if (res.feasible) {
      ++feasible;
      for (const auto& f : forms) CHECK(evaluate_form(f, res.point).sign() > 0);
    } else {
      CHECK(check_farkas(forms, res.farkas));
    }
  }
  CHECK(feasible > 50);
  CHECK(feasible < 450);
}

TEST_CASE("maximize over a polytope") {
  // 0 <= u <= 3, 0 <= w <= 1, maximize u + 2w
  const std::vector<AffineForm> forms{{0, 1, 0}, {3, -1, 0}, {0, 0, 1}, {1, 0, -1}};
  CHECK(maximize_over(forms, {1, 2}, {1, Rational(1, 2)}) == Rational(5));
  CHECK(maximize_over(forms, {-1, 0}, {1, Rational(1, 2)}) == Rational(0));
  CHECK_FALSE(maximize_over({{0, 1}}, {1}, {1}));
}
