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
#include "nilsol/soliton.hpp"

#include <map>
#include <stdexcept>

namespace nilsol {

RationalVector ricci_from_v(const RootMatrix& y, const RationalVector& v) {
  if (v.size() != y.rows.rows()) throw std::invalid_argument("v has the wrong length");
  RationalVector ric(y.rows.cols(), Rational(0));
  for (std::size_t r = 0; r < y.rows.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < y.rows.cols(); ++c)
      if (y.rows(r, c) != 0) ric[c] += Rational(y.rows(r, c)) * v[r];
  }
  const Rational half(-1, 2);
  for (auto& x : ric) x *= half;
  return ric;
}

std::optional<RicciData> soliton_data(const IndexSet& s, const RationalVector& v) {
  if (s.empty()) return std::nullopt;
  const auto y = root_matrix(s);
  RicciData out;
  out.ricci = ricci_from_v(y, v);
  bool first = true;
  for (std::size_t r = 0; r < s.size(); ++r) {
    Rational dot(0);
    for (std::size_t c = 0; c < out.ricci.size(); ++c)
      if (y.rows(r, c) != 0) dot += Rational(y.rows(r, c)) * out.ricci[c];
    if (first) {
      out.beta = dot;
      first = false;
    } else if (dot != out.beta) {
      return std::nullopt;
    }
  }
  out.derivation = out.ricci;
  for (auto& d : out.derivation) d -= out.beta;
  return out;
}

std::optional<Rational> ordered_type_scale(const RationalVector& d) {
  if (d.empty()) return std::nullopt;
  const Rational c = d[0];
  if (c.sign() <= 0) return std::nullopt;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] != c * Rational(static_cast<long>(i + 1))) return std::nullopt;
  return c;
}

PruneDecision positivity_prune(const AffineSolutionSet& s, const IndexSet& lambda) {
  for (auto i : s.fixed_coordinates) {
    if (s.v0[i].sign() > 0) continue;
    std::string where = "coordinate " + std::to_string(i + 1);
    if (i < lambda.size()) where += " (" + to_string(lambda.triples()[i]) + ")";
    return PruneDecision::reject(where + " is fixed at " + s.v0[i].str() + " <= 0");
  }
  return PruneDecision::keep();
}

PruneDecision positivity_prune(const AffineSolutionSet& s) { return positivity_prune(s, IndexSet()); }

PruneDecision invertible_obstruction(const IndexSet& s, const GramMatrix& u, std::size_t null) {
  if (null != 0) return PruneDecision::keep();
  if (static_cast<long>(s.size()) > s.n() - 1)
    return PruneDecision::reject("U invertible with m = " + std::to_string(s.size()) + " > n - 1");
  if (u.contains(-1)) return PruneDecision::reject("U invertible with a -1 entry");
  return PruneDecision::keep();
}

PruneDecision invertible_obstruction(const IndexSet& s, const GramMatrix& u) {
  return invertible_obstruction(s, u, nullity(u));
}

namespace {

using Vec = std::map<int, RadicalSum>;

/// [X_a, X_b] as a coordinate vector.
Vec basis_bracket(const BracketTable& b, int a, int c) {
  Vec out;
  const auto coef = b.bracket_coefficient(a, c);
  if (!coef.is_zero()) out[a + c] = sqrt_to_radical(coef);
  return out;
}

RadicalSum dot(const Vec& x, const Vec& y) {
  RadicalSum s;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it != y.end()) s += v * it->second;
  }
  return s;
}

RadicalSum component(const Vec& x, int k) {
  auto it = x.find(k);
  return it == x.end() ? RadicalSum() : it->second;
}

}  // namespace

Matrix<RadicalSum> ricci_form(const BracketTable& b) {
  const int n = b.n();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Vec>> br(un + 1, std::vector<Vec>(un + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) br[i][j] = basis_bracket(b, i, j);

  Matrix<RadicalSum> ric(un, un);
  const Rational minus_half(-1, 2);
  const Rational quarter(1, 4);
  for (int a = 1; a <= n; ++a) {
    for (int c = 1; c <= n; ++c) {
      RadicalSum first;
      for (int i = 1; i <= n; ++i) first += dot(br[a][i], br[c][i]);
      RadicalSum second;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) second += component(br[i][j], a) * component(br[i][j], c);
      ric(a - 1, c - 1) = first * minus_half + second * quarter;
    }
  }
  return ric;
}

RationalVector ricci_from_brackets(const BracketTable& b) {
  const auto form = ricci_form(b);
  RationalVector out;
  for (std::size_t a = 0; a < form.rows(); ++a) {
    for (std::size_t c = 0; c < form.cols(); ++c) {
      if (a == c) continue;
      if (!form(a, c).is_zero()) throw std::logic_error("Ricci form is not diagonal in the bracket basis");
    }
    if (!form(a, a).is_zero() && !form(a, a).is_rational())
      throw std::logic_error("Ricci eigenvalue is not rational");
    out.push_back(form(a, a).rational_part());
  }
  return out;
}

}  // namespace nilsol
