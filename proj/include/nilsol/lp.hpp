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

#include <optional>
#include <vector>

#include "nilsol/linalg.hpp"

namespace nilsol {

struct SimplexResult {
  bool bounded = true;
  Rational value;
  RationalVector x;
  /// Optimal dual multipliers of the constraint rows (only when bounded).
  RationalVector dual;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Exact rational tableau, Bland's rule.
SimplexResult simplex_max(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// An affine form f(u) = form[0] + sum_i form[i + 1] * u_i.
using AffineForm = RationalVector;

Rational evaluate_form(const AffineForm& f, const RationalVector& u);

struct PositivityResult {
  bool feasible = false;
  /// max over u of min_r f_r(u), capped at 1.
  Rational slack;
  /// When feasible: a point where every form is strictly positive.
  RationalVector point;
  /// When infeasible: y >= 0, y != 0, sum_r y_r f_r has zero linear part and
  /// a constant <= 0. Primitive integer entries.
  RationalVector farkas;
};

/// Is there u with f_r(u) > 0 for every r?
PositivityResult strict_positivity(const std::vector<AffineForm>& forms, std::size_t dims);

/// Checks a Farkas certificate against the forms.
bool check_farkas(const std::vector<AffineForm>& forms, const RationalVector& y);

/// sup of objective.u over {u : f_r(u) >= 0 for all r}, starting from a
/// feasible point. nullopt when unbounded.
std::optional<Rational> maximize_over(const std::vector<AffineForm>& forms, const RationalVector& objective,
                                      const RationalVector& feasible_point);

}  // namespace nilsol
