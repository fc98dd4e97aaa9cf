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
#pragma once

#include <vector>

#include "nilsol/index_set.hpp"
#include "nilsol/matrix.hpp"

namespace nilsol {

using IntMatrix = Matrix<int>;

/// epsilon_i + epsilon_j - epsilon_k as an integer n-vector.
std::vector<int> root_vector(const Triple& t, int n);

/// Rows are the root vectors of the index set in dictionary order.
struct RootMatrix {
  IntMatrix rows;
  std::vector<Triple> triple_of_row;
};

RootMatrix root_matrix(const IndexSet& s);

/// U = Y Y^T. Symmetric with diagonal 3; for ordered-type index sets the
/// off-diagonal entries lie in {-2, -1, 0, 1}.
struct GramMatrix {
  IntMatrix entries;

  std::size_t size() const { return entries.rows(); }
  int operator()(std::size_t r, std::size_t c) const { return entries(r, c); }
  bool contains(int value) const;
};

/// Throws std::invalid_argument("empty index set") when s is empty.
GramMatrix gram(const IndexSet& s);
GramMatrix gram(const RootMatrix& y);

/// Exact rank over Q.
std::size_t rank(const IntMatrix& m);

/// m - rank(U).
std::size_t nullity(const GramMatrix& u);

}  // namespace nilsol
