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
#include "nilsol/root_gram.hpp"

#include <stdexcept>

#include "nilsol/linalg.hpp"

namespace nilsol {

std::vector<int> root_vector(const Triple& t, int n) {
  if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > n || t.j > n || t.k > n)
    throw std::invalid_argument("triple (" + to_string(t) + ") out of range for n=" + std::to_string(n));
  std::vector<int> y(static_cast<std::size_t>(n), 0);
  y[t.i - 1] += 1;
  y[t.j - 1] += 1;
  y[t.k - 1] -= 1;
  return y;
}

RootMatrix root_matrix(const IndexSet& s) {
  RootMatrix out{IntMatrix(s.size(), static_cast<std::size_t>(s.n())), s.triples()};
  for (std::size_t r = 0; r < s.size(); ++r) {
    const auto y = root_vector(s.triples()[r], s.n());
    for (std::size_t c = 0; c < y.size(); ++c) out.rows(r, c) = y[c];
  }
  return out;
}

bool GramMatrix::contains(int value) const {
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      if (entries(r, c) == value) return true;
  return false;
}

GramMatrix gram(const RootMatrix& y) {
  const std::size_t m = y.rows.rows();
  if (m == 0) throw std::invalid_argument("empty index set");
  GramMatrix u{IntMatrix(m, m)};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      int dot = 0;
      for (std::size_t c = 0; c < y.rows.cols(); ++c) dot += y.rows(a, c) * y.rows(b, c);
      u.entries(a, b) = dot;
      u.entries(b, a) = dot;
    }
  }
  return u;
}

GramMatrix gram(const IndexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty index set");
  return gram(root_matrix(s));
}

std::size_t rank(const IntMatrix& m) { return rref(to_rational(m)).rank; }

std::size_t nullity(const GramMatrix& u) { return u.size() - rank(u.entries); }

}  // namespace nilsol
