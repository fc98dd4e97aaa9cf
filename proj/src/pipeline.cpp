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
#include "nilsol/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace nilsol {

std::map<std::size_t, NullityCounts> Report::counts() const {
  std::map<std::size_t, NullityCounts> out;
  for (const auto& r : records) {
    if (r.verdict.status == Status::Excluded || !r.nullity) continue;
    auto& c = out[*r.nullity];
    switch (r.verdict.status) {
      case Status::Soliton: ++c.solitons; break;
      case Status::Candidate: ++c.candidates; break;
      case Status::NonSoliton: ++c.nonsolitons; break;
      case Status::Excluded: break;
    }
  }
  return out;
}

std::size_t Report::excluded() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.verdict.status == Status::Excluded;
  }));
}

std::size_t Report::invertible_solitons() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.invertible && r.verdict.status == Status::Soliton;
  }));
}

std::vector<const ClassificationRecord*> Report::with_status(Status s) const {
  std::vector<const ClassificationRecord*> out;
  for (const auto& r : records)
    if (r.verdict.status == s) out.push_back(&r);
  return out;
}

std::vector<JacobiEquation> jacobi_equations(const IndexSet& s, JacobiGrouping g) {
  return g == JacobiGrouping::ByTarget ? jacobi_system_by_target(s) : jacobi_system(s);
}

namespace {

Refutation filter_refutation(const std::string& name, const std::string& text) {
  return Refutation{name, {RefutationStep{"filter", text, -1, -1, {}, {}}}};
}

void reject(ClassificationRecord& rec, const std::string& name, Refutation ref) {
  rec.verdict.status = Status::NonSoliton;
  rec.verdict.refutation = std::move(ref);
  rec.pruned_by = name;
}

void exclude(ClassificationRecord& rec, const std::string& name, const std::string& why) {
  rec.verdict.status = Status::Excluded;
  rec.verdict.notes.push_back(why);
  rec.pruned_by = name;
}

std::string vector_str(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string ordered_type_failure(const IndexSet& s, const AffineSolutionSet& a) {
  const auto data = soliton_data(s, a.v0);
  if (!data) return "beta differs between triples";
  if (is_ordered_type(data->derivation)) return {};
  return "derivation " + vector_str(data->derivation) + " is not a positive multiple of (1,...,n)";
}

std::optional<RefutationStep> single_term(const std::vector<JacobiEquation>& eqs) {
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (eqs[e].terms.size() != 1) continue;
    return RefutationStep{"single-term", eqs[e].str() + " has a single term, but both constants are nonzero",
                          static_cast<int>(e), -1, {}, {}};
  }
  return std::nullopt;
}

std::string farkas_text(const IndexSet& s, const ParameterizedSquares& p, const RationalVector& y) {
  Rational total(0);
  std::string combo;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r].is_zero()) continue;
    total += y[r] * p.coord[r][0];
    if (!combo.empty()) combo += " + ";
    combo += (y[r] == Rational(1) ? "" : y[r].str() + "*") + "a(" + to_string(s.triples()[r]) + ")^2";
  }
  return combo + " = " + total.str() + " on the whole solution set";
}

}  // namespace

ClassificationRecord classify(const IndexSet& s, const Config& config) {
  ClassificationRecord rec;
  rec.index_set = s;
  rec.m = s.size();
  if (s.empty()) {
    rec.filters.push_back(filter::kAbelian);
    exclude(rec, filter::kAbelian, "abelian");
    return rec;
  }
  if (config.direct_sum_filter) {
    rec.filters.push_back(filter::kDirectSum);
    if (has_direct_sum_factor(s)) {
      exclude(rec, filter::kDirectSum, "decomposable: has a direct-sum factor");
      return rec;
    }
  }
  const GramMatrix u = gram(s);
  const auto affine = solve_affine(u);
  rec.nullity = affine ? affine->dimension() : nullity(u);
  rec.invertible = *rec.nullity == 0;

  if (config.invertible_filter) {
    rec.filters.push_back(filter::kInvertible);
    const auto d = invertible_obstruction(s, u, *rec.nullity);
    if (d.prune) {
      reject(rec, filter::kInvertible, filter_refutation(filter::kInvertible, d.reason));
      return rec;
    }
  }
  rec.filters.push_back(filter::kInconsistent);
  if (!affine) {
    reject(rec, filter::kInconsistent, filter_refutation(filter::kInconsistent, "inconsistent system"));
    return rec;
  }
  if (config.positivity_filter) {
    rec.filters.push_back(filter::kPositivity);
    const auto d = positivity_prune(*affine, s);
    if (d.prune) {
      reject(rec, filter::kPositivity, filter_refutation(filter::kPositivity, d.reason));
      return rec;
    }
  }
  if (config.ordered_type_filter) {
    rec.filters.push_back(filter::kOrderedType);
    const auto why = ordered_type_failure(s, *affine);
    if (!why.empty()) {
      reject(rec, filter::kOrderedType, filter_refutation(filter::kOrderedType, why));
      return rec;
    }
  }
  if (config.strict_positivity) {
    rec.filters.push_back(filter::kStrictPositivity);
    const auto p = parameterize(*affine);
    const auto pos = strict_positivity(p.coord, p.params);
    if (!pos.feasible) {
      RefutationStep step{"farkas", farkas_text(s, p, pos.farkas), -1, -1, {}, pos.farkas};
      reject(rec, filter::kStrictPositivity, Refutation{filter::kStrictPositivity, {step}});
      return rec;
    }
  }
  const auto eqs = jacobi_equations(s, config.grouping);
  if (config.jacobi_screen) {
    rec.filters.push_back(filter::kJacobiScreen);
    if (auto step = single_term(eqs)) {
      reject(rec, filter::kJacobiScreen, Refutation{filter::kJacobiScreen, {*step}});
      return rec;
    }
  }
  if (!config.resolve) {
    rec.verdict.status = Status::Candidate;
    return rec;
  }
  rec.filters.push_back(filter::kResolve);
  rec.verdict = resolve(s, *affine, eqs);
  if (rec.verdict.status == Status::NonSoliton) rec.pruned_by = filter::kResolve;
  return rec;
}

Report run(int n, const Config& config) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const auto triples = theta(n);
  if (triples.size() > 20) throw std::invalid_argument("n = " + std::to_string(n) + " is too large to enumerate");
  const Mask total = Mask{1} << triples.size();
  Report rep;
  rep.n = n;
  rep.config = config;
  rep.records.resize(static_cast<std::size_t>(total));
  const unsigned jobs = std::max(1u, config.jobs);
  auto work = [&](Mask lo, Mask hi) {
    for (Mask m = lo; m < hi; ++m) rep.records[static_cast<std::size_t>(m)] = classify(IndexSet::decode(m, n), config);
  };
  if (jobs == 1) {
    work(0, total);
    return rep;
  }
  std::vector<std::thread> pool;
  const Mask chunk = (total + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const Mask lo = std::min<Mask>(total, chunk * j);
    const Mask hi = std::min<Mask>(total, lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& t : pool) t.join();
  return rep;
}

bool replay_record(const ClassificationRecord& r, const Config& config) {
  if (r.verdict.status != Status::NonSoliton) return true;
  if (!r.pruned_by || !r.verdict.refutation) return false;
  const IndexSet& s = r.index_set;
  const std::string& by = *r.pruned_by;
  const GramMatrix u = gram(s);
  const auto affine = solve_affine(u);
  if (by == filter::kInvertible) return invertible_obstruction(s, u).prune;
  if (by == filter::kInconsistent) return !affine.has_value();
  if (!affine) return false;
  if (by == filter::kPositivity) return positivity_prune(*affine, s).prune;
  if (by == filter::kOrderedType) return !ordered_type_failure(s, *affine).empty();
  const auto& steps = r.verdict.refutation->steps;
  if (by == filter::kStrictPositivity) {
    const auto p = parameterize(*affine);
    return steps.size() == 1 && check_farkas(p.coord, steps[0].weights);
  }
  const auto eqs = jacobi_equations(s, config.grouping);
  if (by == filter::kJacobiScreen) {
    if (steps.size() != 1 || steps[0].equation < 0) return false;
    const auto e = static_cast<std::size_t>(steps[0].equation);
    return e < eqs.size() && eqs[e].terms.size() == 1;
  }
  if (by == filter::kResolve) return replay_refutation(s, *affine, eqs, *r.verdict.refutation);
  return false;
}

}  // namespace nilsol
