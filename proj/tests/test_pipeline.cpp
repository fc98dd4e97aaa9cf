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

#include <set>

#include "nilsol/pipeline.hpp"
#include "nilsol/serialize.hpp"
#include "nilsol/soliton.hpp"

using namespace nilsol;

TEST_CASE("n = 6 classification") {
  const auto r = run(6, Config{});
  CHECK(r.records.size() == 64);
  const auto sol = r.with_status(Status::Soliton);
  REQUIRE(sol.size() == 1);
  CHECK(sol[0]->index_set.mask() == 63);
  CHECK(*sol[0]->nullity == 1);
  CHECK(r.invertible_solitons() == 0);
  CHECK(r.with_status(Status::Candidate).empty());
}

TEST_CASE("n = 7 solitons") {
  const auto r = run(7, Config{});
  std::set<Mask> masks;
  for (const auto* p : r.with_status(Status::Soliton)) masks.insert(p->index_set.mask());
  CHECK(masks == std::set<Mask>{254, 379, 495});
  CHECK(r.invertible_solitons() == 0);
}

TEST_CASE("records cover every mask once, in order") {
  for (int n = 3; n <= 8; ++n) {
    const auto r = run(n, Config{});
    REQUIRE(r.records.size() == (std::size_t{1} << theta(n).size()));
    for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(r.records[i].index_set.mask() == i);
    std::size_t total = r.excluded();
    for (const auto& [k, c] : r.counts()) total += c.solitons + c.candidates + c.nonsolitons;
    CHECK(total == r.records.size());
  }
}

TEST_CASE("invalid dimensions") {
  CHECK_THROWS_AS(run(2, Config{}), std::invalid_argument);
  CHECK_THROWS_AS(run(11, Config{}), std::invalid_argument);
}

TEST_CASE("worker count does not change the report") {
  Config one;
  Config many;
  many.jobs = 5;
  const auto a = render_report(run(8, one), Format::Json);
  const auto b = render_report(run(8, many), Format::Json);
  CHECK(a == b);
}

TEST_CASE("filter soundness") {
  const auto r = run(8, Config{});
  for (const auto& rec : r.records) {
    if (!rec.pruned_by) continue;
    CHECK(rec.verdict.status != Status::Soliton);
    CHECK(rec.filters.back() == *rec.pruned_by);
    if (*rec.pruned_by == filter::kInvertible) CHECK(*rec.nullity == 0);
    if (*rec.pruned_by == filter::kPositivity) {
      const auto sol = solve_affine(gram(rec.index_set));
      REQUIRE(sol);
      bool nonpositive = false;
      for (auto i : sol->fixed_coordinates) nonpositive = nonpositive || sol->v0[i].sign() <= 0;
      CHECK(nonpositive);
    }
    if (*rec.pruned_by == filter::kDirectSum) CHECK(has_direct_sum_factor(rec.index_set));
  }
}

TEST_CASE("filters can be switched off") {
  Config cfg;
  cfg.direct_sum_filter = false;
  const auto r = run(6, cfg);
  // decomposable sets are classified instead of excluded; only the empty set stays out
  CHECK(r.excluded() == 1);
  CHECK(r.with_status(Status::Soliton).size() >= 1);

  Config lax;
  lax.resolve = false;
  const auto c = run(6, lax);
  CHECK(c.with_status(Status::Soliton).empty());
  CHECK(c.with_status(Status::Candidate).size() == 1);

  Config strict;
  strict.strict_positivity = true;
  const auto s = run(7, strict);
  CHECK(s.with_status(Status::Soliton).size() == 3);
}

TEST_CASE("grouping by target is available for auditing") {
  Config cfg;
  cfg.grouping = JacobiGrouping::ByTarget;
  const auto r = run(8, cfg);
  CHECK(r.records.size() == 4096);
  for (const auto& rec : r.records) CHECK(replay_record(rec, cfg));
}
