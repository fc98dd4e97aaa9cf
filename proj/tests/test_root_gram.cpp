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

#include "nilsol/linalg.hpp"
#include "nilsol/root_gram.hpp"
#include "support/oracles.hpp"

using namespace nilsol;

TEST_CASE("root vectors") {
  CHECK(root_vector({1, 2, 3}, 3) == std::vector<int>{1, 1, -1});
  CHECK(root_vector({2, 4, 6}, 6) == std::vector<int>{0, 1, 0, 1, 0, -1});
  CHECK_THROWS(root_vector({2, 4, 6}, 5));
}

TEST_CASE("Gram matrix of theta 6") {
  const auto u = gram(decode(63, 6));
  const std::vector<std::vector<int>> expected{{3, 0, 1, 1, 0, 1},   {0, 3, 0, 1, 1, -1}, {1, 0, 3, 0, 1, 1},
                                               {1, 1, 0, 3, -1, 1},  {0, 1, 1, -1, 3, 1}, {1, -1, 1, 1, 1, 3}};
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(u(r, c) == expected[r][c]);
  CHECK(nullity(u) == 1);
}

TEST_CASE("Gram is Y Y^T") {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + i % 7;
    const auto s = decode(testing::random_mask(n, rng), n);
    if (s.empty()) continue;
    const auto y = root_matrix(s);
    const auto u = gram(y);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        int dot = 0;
        for (int c = 0; c < n; ++c) dot += root_vector(s.triples()[a], n)[c] * root_vector(s.triples()[b], n)[c];
        CHECK(u(a, b) == dot);
      }
  }
  CHECK_THROWS_AS(gram(decode(0, 6)), std::invalid_argument);
}

TEST_CASE("Gram structure, exhaustive over theta 8") {
  const auto s = testing::gram_structure_exhaustive(8);
  INFO(s.first_failure);
  CHECK(s.cases == 4095);
  CHECK(s.ok());
}

TEST_CASE("rank(U) = rank(Y), exhaustive up to n = 8, sampled at n = 9") {
  for (int n = 3; n <= 8; ++n) {
    const Mask top = Mask{1} << theta(n).size();
    for (Mask m = 1; m < top; ++m) {
      const auto y = root_matrix(decode(m, n));
      CHECK(rank(gram(y).entries) == rank(y.rows));
    }
  }
  testing::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = decode(testing::random_mask(9, rng) | 1, 9);
    const auto y = root_matrix(s);
    CHECK(rank(gram(y).entries) == rank(y.rows));
  }
}
