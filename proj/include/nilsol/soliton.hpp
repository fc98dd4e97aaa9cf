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
#include <string>

#include "nilsol/jacobi.hpp"
#include "nilsol/linalg.hpp"
#include "nilsol/root_gram.hpp"

namespace nilsol {

/// Diagonal Ricci data in the eigenvector basis. derivation = ricci - beta.
struct RicciData {
  RationalVector ricci;
  Rational beta;
  RationalVector derivation;

  friend bool operator==(const RicciData&, const RicciData&) = default;
};

/// -1/2 Y^T v with v the vector of squared structure constants.
RationalVector ricci_from_v(const RootMatrix& y, const RationalVector& v);

/// beta is read off the first triple and must agree on every other triple.
/// nullopt when it does not (or when the index set is empty).
std::optional<RicciData> soliton_data(const IndexSet& s, const RationalVector& v);

/// c > 0 with d = c * (1, 2, ..., n), if any.
std::optional<Rational> ordered_type_scale(const RationalVector& d);
inline bool is_ordered_type(const RationalVector& d) { return ordered_type_scale(d).has_value(); }

struct PruneDecision {
  bool prune = false;
  std::string reason;

  static PruneDecision keep() { return {}; }
  static PruneDecision reject(std::string why) { return {true, std::move(why)}; }
};

/// Rejects when some coordinate fixed on the whole solution set is <= 0.
PruneDecision positivity_prune(const AffineSolutionSet& s, const IndexSet& lambda);
PruneDecision positivity_prune(const AffineSolutionSet& s);

/// Rejects invertible U with m > n - 1 or with a -1 entry.
PruneDecision invertible_obstruction(const IndexSet& s, const GramMatrix& u, std::size_t nullity);
PruneDecision invertible_obstruction(const IndexSet& s, const GramMatrix& u);

/// Full Ricci form ric(X_a, X_b) from the bilinear formula, exact.
Matrix<RadicalSum> ricci_form(const BracketTable& b);

/// Diagonal of ricci_form. Throws std::logic_error if an off-diagonal entry
/// or a diagonal entry fails to be rational.
RationalVector ricci_from_brackets(const BracketTable& b);

}  // namespace nilsol
