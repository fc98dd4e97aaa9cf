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

#include <cstddef>
#include <optional>
#include <vector>

#include "nilsol/matrix.hpp"
#include "nilsol/rational.hpp"
#include "nilsol/root_gram.hpp"

namespace nilsol {

using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Rows are cleared to integers and eliminated
/// fraction-free; the echelon rows are normalized at the end.
RrefResult rref(const RationalMatrix& m);

/// Basis of the right kernel in the free-column parameterization: one vector
/// per non-pivot column, with a 1 in that column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// General solution of U v = [1]: v = v0 + sum_r t_r kernel[r].
struct AffineSolutionSet {
  RationalVector v0;
  std::vector<RationalVector> kernel;
  /// Coordinates where every kernel vector vanishes; v takes the value v0(i)
  /// there on the whole solution set.
  std::vector<std::size_t> fixed_coordinates;

  std::size_t dimension() const { return kernel.size(); }
};

/// nullopt when [1] is not in the column space of U.
std::optional<AffineSolutionSet> solve_affine(const GramMatrix& u);

/// Ker(Y^T) == Ker(U) as subspaces of Q^m.
bool kernel_equal(const IntMatrix& yt, const GramMatrix& u);

}  // namespace nilsol
