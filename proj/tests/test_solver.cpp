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

#include "nilsol/pipeline.hpp"
#include "nilsol/solver.hpp"
#include "support/oracles.hpp"

using namespace nilsol;

namespace {

Verdict resolve_set(const IndexSet& s) {
  const auto sol = solve_affine(gram(s));
  REQUIRE(sol);
  return resolve(s, *sol, jacobi_system(s));
}

}  // namespace

TEST_CASE("theta 6 resolves to a certified soliton") {
  const auto v = resolve_set(decode(63, 6));
  REQUIRE(v.status == Status::Soliton);
  REQUIRE(v.certificate);
  const auto& c = *v.certificate;
  CHECK(c.brackets.squares() == RationalVector{22, 36, 22, 30, 30, 25});
  CHECK(c.normalization == Rational(143));
  CHECK(c.ricci.beta == Rational(-143, 2));
  CHECK(ordered_type_scale(c.ricci.derivation) == Rational(33, 2));
  const auto check = verify_certificate(c.brackets);
  CHECK(check.valid);
  CHECK(check.normalization == Rational(143));
}

TEST_CASE("single-term Jacobi equation refutes") {
  // a(1,2,3) a(3,4,7) appears alone
  const auto s = IndexSet::parse("1,2,3;1,3,4;1,4,5;1,5,6;1,6,7;1,7,8;2,3,5;2,4,6;2,5,7;3,4,7", 8);
  const auto sol = solve_affine(gram(s));
  REQUIRE(sol);
  const auto eqs = jacobi_system(s);
  const auto v = resolve(s, *sol, eqs);
  CHECK(v.status == Status::NonSoliton);
  REQUIRE(v.refutation);
  CHECK(v.refutation->steps.front().kind == "single-term");
  CHECK(replay_refutation(s, *sol, eqs, *v.refutation));
  // a tampered refutation does not replay
  auto bad = *v.refutation;
  bad.steps.front().equation = 0;
  if (eqs[0].terms.size() != 1) CHECK_FALSE(replay_refutation(s, *sol, eqs, bad));
}

TEST_CASE("sign search") {
  const auto s = decode(63, 6);
  const auto eqs = jacobi_system(s);
  const auto signs = find_signs(s, {22, 36, 22, 30, 30, 25}, eqs);
  REQUIRE(signs);
  const auto b = BracketTable::from_squares(s, {22, 36, 22, 30, 30, 25}, *signs);
  CHECK(jacobi_bruteforce(b));
  // squares violating the equation admit no signs
  CHECK_FALSE(find_signs(s, {22, 36, 22, 30, 31, 25}, eqs));
}

TEST_CASE("certificate checker accepts the dim-6 algebra and rejects Jacobi mutations") {
  const auto s = testing::certificate_mutations();
  INFO(s.first_failure);
  CHECK(s.cases > 400);
  CHECK(s.ok());
}

TEST_CASE("certificate checker rejects non-solitons") {
  CHECK_FALSE(verify_certificate(BracketTable(3)).valid);
  testing::Rng rng(47);
  const auto w = testing::rescaled_witt(7, rng);
  const auto c = verify_certificate(w);
  CHECK_FALSE(c.jacobi_failure);
  // sign changes of a bracket outside every Jacobi term keep a valid certificate
  auto d = testing::dim6_algebra();
  d.set({1, 2, 3}, d.get({1, 2, 3}).negated());
  CHECK(verify_certificate(d).valid);
  // rescaling the whole table keeps it a soliton
  BracketTable scaled(6);
  const auto base = testing::dim6_algebra();
  for (const auto& [t, a] : base.coefficients()) scaled.set(t, SignedSqrt(a.sign(), a.square() * Rational(2, 7)));
  CHECK(verify_certificate(scaled).valid);
}

TEST_CASE("status names") {
  for (auto s : {Status::Soliton, Status::NonSoliton, Status::Candidate, Status::Excluded})
    CHECK(parse_status(to_string(s)) == s);
  CHECK_FALSE(parse_status("maybe"));
}

TEST_CASE("every refutation at n = 7 and n = 8 replays, every soliton verifies") {
  for (int n : {7, 8}) {
    Config cfg;
    const auto r = run(n, cfg);
    for (const auto& rec : r.records) {
      INFO("n=" << n << " mask " << rec.index_set.mask());
      CHECK(replay_record(rec, cfg));
      if (rec.verdict.status == Status::Soliton) {
        REQUIRE(rec.verdict.certificate);
        CHECK(verify_certificate(rec.verdict.certificate->brackets).valid);
        CHECK(rec.verdict.certificate->brackets.index_set() == rec.index_set);
      }
    }
  }
}
