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
#include "nilsol/jacobi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilsol {

void BracketTable::set(const Triple& t, const SignedSqrt& alpha) {
  if (!t.ordered_type() || t.i < 1 || t.k > n_)
    throw std::invalid_argument("bracket (" + to_string(t) + ") is not ordered-type for n=" + std::to_string(n_));
  if (alpha.is_zero()) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = alpha;
  }
}

SignedSqrt BracketTable::get(const Triple& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? SignedSqrt() : it->second;
}

SignedSqrt BracketTable::bracket_coefficient(int a, int b) const {
  if (a == b || a + b > n_) return {};
  if (a < b) return get({a, b, a + b});
  return get({b, a, a + b}).negated();
}

IndexSet BracketTable::index_set() const {
  std::vector<Triple> ts;
  for (const auto& [t, alpha] : coeffs_) ts.push_back(t);
  return IndexSet(n_, std::move(ts));
}

RationalVector BracketTable::squares() const {
  RationalVector out;
  for (const auto& [t, alpha] : coeffs_) out.push_back(alpha.square());
  return out;
}

BracketTable BracketTable::from_squares(const IndexSet& s, const RationalVector& squares, const std::vector<int>& signs) {
  if (squares.size() != s.size() || signs.size() != s.size())
    throw std::invalid_argument("squares/signs length differs from the index set");
  BracketTable b(s.n());
  for (std::size_t r = 0; r < s.size(); ++r) b.set(s.triples()[r], SignedSqrt(signs[r], squares[r]));
  return b;
}

namespace {

std::string alpha_name(const Triple& t) { return "a(" + to_string(t) + ")"; }

Triple oriented(int a, int b) { return a < b ? Triple{a, b, a + b} : Triple{b, a, a + b}; }

/// Terms of the cyclic sum for a < b < c that are supported on the index set.
std::vector<JacobiTerm> cyclic_terms(int a, int b, int c, const IndexSet& s) {
  std::vector<JacobiTerm> out;
  auto push = [&](int sign, int p, int q, int r) {
    // sign * alpha(p,q) * alpha(p+q, r) in oriented form
    if (sign == 0 || p + q == r) return;
    const int orient = (p + q) < r ? 1 : -1;
    const Triple inner = oriented(p, q);
    const Triple outer = oriented(p + q, r);
    if (s.contains(inner) && s.contains(outer)) out.push_back({sign * orient, inner, outer});
  };
  // [[X_a,X_b],X_c]
  push(1, a, b, c);
  // [[X_b,X_c],X_a]
  push(1, b, c, a);
  // [[X_c,X_a],X_b] = -alpha(a,c) [X_{a+c}, X_b]
  push(-1, a, c, b);
  std::sort(out.begin(), out.end(), [](const JacobiTerm& x, const JacobiTerm& y) {
    return x.first != y.first ? x.first < y.first : x.second < y.second;
  });
  return out;
}

}  // namespace

std::string JacobiEquation::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i == 0) {
      if (t.coefficient < 0) out += "-";
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
    }
    out += alpha_name(t.first) + "*" + alpha_name(t.second);
  }
  return out + " = 0";
}

std::vector<JacobiEquation> jacobi_system(const IndexSet& s) {
  const int n = s.n();
  std::vector<JacobiEquation> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; a + b + c <= n; ++c) {
        auto terms = cyclic_terms(a, b, c, s);
        if (terms.empty()) continue;
        out.push_back({a + b + c, {{a, b, c}}, std::move(terms)});
      }
  return out;
}

std::vector<JacobiEquation> jacobi_system_by_target(const IndexSet& s) {
  std::map<int, JacobiEquation> by_m;
  for (auto& eq : jacobi_system(s)) {
    auto& g = by_m[eq.target_m];
    g.target_m = eq.target_m;
    g.generators.insert(g.generators.end(), eq.generators.begin(), eq.generators.end());
    g.terms.insert(g.terms.end(), eq.terms.begin(), eq.terms.end());
  }
  std::vector<JacobiEquation> out;
  for (auto& [m, eq] : by_m) out.push_back(std::move(eq));
  return out;
}

RadicalSum evaluate(const JacobiEquation& eq, const BracketTable& b) {
  RadicalSum sum;
  for (const auto& t : eq.terms) sum += radical_mul(b.get(t.first), b.get(t.second)) * Rational(t.coefficient);
  return sum;
}

namespace {

using Vec = std::map<int, RadicalSum>;

Vec bracket(const BracketTable& table, const Vec& u, const Vec& w) {
  Vec out;
  for (const auto& [a, ua] : u) {
    for (const auto& [b, wb] : w) {
      const auto c = table.bracket_coefficient(a, b);
      if (c.is_zero()) continue;
      out[a + b] += ua * wb * sqrt_to_radical(c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Vec basis(int a) { return Vec{{a, RadicalSum(Rational(1))}}; }

void accumulate(Vec& acc, const Vec& x) {
  for (const auto& [k, v] : x) acc[k] += v;
}

}  // namespace

std::optional<JacobiFailure> jacobi_bruteforce_failure(const BracketTable& b) {
  const int n = b.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Vec xi = basis(i);
        const Vec xj = basis(j);
        const Vec xk = basis(k);
        Vec sum = bracket(b, bracket(b, xi, xj), xk);
        accumulate(sum, bracket(b, bracket(b, xj, xk), xi));
        accumulate(sum, bracket(b, bracket(b, xk, xi), xj));
        for (const auto& [comp, v] : sum)
          if (!v.is_zero()) return JacobiFailure{{i, j, k}, v};
      }
  return std::nullopt;
}

bool jacobi_check_via_system(const BracketTable& b) {
  for (const auto& eq : jacobi_system(b.index_set()))
    if (!evaluate(eq, b).is_zero()) return false;
  return true;
}

}  // namespace nilsol
