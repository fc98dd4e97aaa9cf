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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilsol/index_set.hpp"
#include "nilsol/radical.hpp"

namespace nilsol {

/// Structure constants [X_i, X_j] = alpha_ij X_{i+j} for i < j in an
/// orthonormal eigenvector basis. Zero coefficients are not stored.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(int n) : n_(n) {}

  int n() const { return n_; }

  /// Throws if t is not an ordered-type triple for n. Setting zero erases.
  void set(const Triple& t, const SignedSqrt& alpha);

  /// alpha for the triple, zero when absent.
  SignedSqrt get(const Triple& t) const;

  /// Coefficient of X_{a+b} in [X_a, X_b] for any a, b, with skew symmetry.
  SignedSqrt bracket_coefficient(int a, int b) const;

  const std::map<Triple, SignedSqrt>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  IndexSet index_set() const;

  /// alpha^2 for each triple of index_set(), in dictionary order.
  RationalVector squares() const;

  /// Table with the given squares and signs on an index set.
  static BracketTable from_squares(const IndexSet& s, const RationalVector& squares, const std::vector<int>& signs);

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  int n_ = 0;
  std::map<Triple, SignedSqrt> coeffs_;
};

/// coefficient * alpha(first) * alpha(second). The first factor is the inner
/// bracket of the nested commutator, the second the outer one.
struct JacobiTerm {
  int coefficient = 1;
  Triple first;
  Triple second;

  friend bool operator==(const JacobiTerm&, const JacobiTerm&) = default;
};

struct JacobiEquation {
  int target_m = 0;
  /// Basis triples {a < b < c} whose cyclic sum produced the terms. One entry
  /// for per-triple equations, several for equations grouped by target.
  std::vector<std::array<int, 3>> generators;
  std::vector<JacobiTerm> terms;

  /// "a(1,3,4)*a(2,4,6) - a(2,3,5)*a(1,5,6) = 0"
  std::string str() const;
};

/// One equation per basis triple a < b < c with a+b+c <= n whose cyclic sum
/// [[X_a,X_b],X_c] + [[X_b,X_c],X_a] + [[X_c,X_a],X_b] has at least one term
/// supported on the index set. Terms are in canonical i < j orientation.
std::vector<JacobiEquation> jacobi_system(const IndexSet& s);

/// The per-triple system with all equations of equal target m summed into
/// one. This is not equivalent to the Jacobi identity; it exists to audit
/// published tables that were produced this way.
std::vector<JacobiEquation> jacobi_system_by_target(const IndexSet& s);

RadicalSum evaluate(const JacobiEquation& eq, const BracketTable& b);

/// First basis triple (a, b, c) whose Jacobiator is nonzero, with the value.
struct JacobiFailure {
  std::array<int, 3> triple;
  RadicalSum value;
};

/// Direct evaluation of the cyclic sum for every 1 <= a < b < c <= n using
/// generic bracket arithmetic on coordinate vectors.
std::optional<JacobiFailure> jacobi_bruteforce_failure(const BracketTable& b);
inline bool jacobi_bruteforce(const BracketTable& b) { return !jacobi_bruteforce_failure(b).has_value(); }

bool jacobi_check_via_system(const BracketTable& b);

}  // namespace nilsol
