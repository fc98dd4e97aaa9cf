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

#include "nilsol/index_set.hpp"

using namespace nilsol;

TEST_CASE("theta sizes and dictionary order") {
  CHECK(theta(2).empty());
  CHECK(theta(3).size() == 1);
  CHECK(theta(6).size() == 6);
  CHECK(theta(7).size() == 9);
  CHECK(theta(8).size() == 12);
  CHECK(theta(9).size() == 16);
  const std::vector<Triple> t6{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 3, 5}, {2, 4, 6}};
  CHECK(theta(6) == t6);
  for (int n = 3; n <= 12; ++n) {
    const auto t = theta(n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i].ordered_type());
      CHECK(t[i].k <= n);
      if (i) CHECK(t[i - 1] < t[i]);
      CHECK(theta_position(t[i], n) == static_cast<int>(i));
    }
  }
  CHECK(theta_position({1, 2, 4}, 6) == -1);
}

TEST_CASE("theta size equals the count of pairs i < j with i + j <= n") {
  for (int n = 1; n <= 16; ++n) {
    std::size_t count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; i + j <= n; ++j) ++count;
    CHECK(theta(n).size() == count);
  }
}

TEST_CASE("mask encoding round-trips") {
  for (int n : {6, 8, 9}) {
    const Mask top = Mask{1} << theta(n).size();
    for (Mask m = 0; m < top; m += (n == 9 ? 97 : 1)) {
      const auto s = decode(m, n);
      CHECK(encode(s) == m);
      CHECK(IndexSet(n, s.triples()) == s);
      CHECK(IndexSet::parse(s.str(), n) == s);
    }
  }
  CHECK(decode(1, 6).triples() == std::vector<Triple>{{1, 2, 3}});
  CHECK(decode(63, 6).str() == "1,2,3;1,3,4;1,4,5;1,5,6;2,3,5;2,4,6");
}

TEST_CASE("index set parsing") {
  CHECK(IndexSet::parse("63", 6).mask() == 63);
  CHECK(IndexSet::parse(" 2,3,5 ; 1,2,3 ", 6).mask() == 0b10001);
  CHECK(IndexSet::parse("", 6).empty());
  CHECK_THROWS_AS(IndexSet::parse("1,2,4", 6), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet::parse("1,2", 6), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet::parse("64", 6), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet::parse("2,4,6", 5), std::invalid_argument);
}

TEST_CASE("direct-sum detection") {
  CHECK_FALSE(has_direct_sum_factor(decode(63, 6)));
  // X_6 untouched
  CHECK(has_direct_sum_factor(IndexSet::parse("1,2,3;1,3,4;1,4,5", 6)));
  // connected through shared indices
  CHECK_FALSE(has_direct_sum_factor(IndexSet::parse("1,2,3", 3)));
  // {1,3,4} and {2,5,7}... with 6 isolated at n = 7
  CHECK(has_direct_sum_factor(IndexSet::parse("1,3,4;2,5,7;1,4,5", 7)));
  CHECK(has_direct_sum_factor(IndexSet::parse("1,3,4;2,5,7", 7)));
}
