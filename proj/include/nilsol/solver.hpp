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
#include <string>
#include <vector>

#include "nilsol/jacobi.hpp"
#include "nilsol/linalg.hpp"
#include "nilsol/lp.hpp"
#include "nilsol/polynomial.hpp"
#include "nilsol/soliton.hpp"

namespace nilsol {

enum class Status { Soliton, NonSoliton, Candidate, Excluded };

std::string to_string(Status s);
std::optional<Status> parse_status(const std::string& s);

/// Squared structure constants on the solution set of U v = [1]:
/// coord[r](t) = v0[r] + sum_i t_i kernel[i][r], as affine forms in t.
struct ParameterizedSquares {
  std::size_t params = 0;
  std::vector<AffineForm> coord;
};

ParameterizedSquares parameterize(const AffineSolutionSet& s);

/// P1(t) = P2(t) for every two-term equation, where P_i is the product of
/// the coordinate forms of term i. Longer equations contribute nothing.
std::vector<MPoly> derive_sign_square_relations(const std::vector<JacobiEquation>& eqs, const IndexSet& lambda,
                                                const ParameterizedSquares& p);

/// A single deduction. Linear steps carry the relation in the parameters
/// current at that point; terminal steps carry what is needed to recheck
/// them.
struct RefutationStep {
  std::string kind;
  std::string text;
  int equation = -1;
  int coordinate = -1;
  AffineForm relation;
  RationalVector weights;

  friend bool operator==(const RefutationStep&, const RefutationStep&) = default;
};

struct Refutation {
  std::string reason;
  std::vector<RefutationStep> steps;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

struct Certificate {
  BracketTable brackets;
  RicciData ricci;
  /// U * squares = normalization * [1].
  Rational normalization;
};

struct Verdict {
  Status status = Status::Candidate;
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
  std::vector<std::string> notes;
};

/// Decides the Jacobi system over the positive part of the solution set.
/// Assumes the linear filters already ran (in particular that the Ricci
/// derivation is of ordered type).
Verdict resolve(const IndexSet& lambda, const AffineSolutionSet& s, const std::vector<JacobiEquation>& eqs);

struct CertificateCheck {
  bool valid = false;
  std::optional<RicciData> ricci;
  Rational normalization;
  std::optional<JacobiFailure> jacobi_failure;
  std::vector<std::string> problems;
};

/// Jacobi by brute force, U * squares a positive constant vector, consistent
/// beta, ordered-type derivation and a nonabelian table.
CertificateCheck verify_certificate(const BracketTable& c);

/// Re-executes the recorded steps of a solver refutation from scratch.
bool replay_refutation(const IndexSet& lambda, const AffineSolutionSet& s, const std::vector<JacobiEquation>& eqs,
                       const Refutation& r);

/// Signs for the constants so that every equation vanishes at the given
/// positive squares; constants outside all equations get +1.
std::optional<std::vector<int>> find_signs(const IndexSet& lambda, const RationalVector& squares,
                                           const std::vector<JacobiEquation>& eqs);

}  // namespace nilsol
