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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilsol/solver.hpp"

namespace nilsol {

enum class JacobiGrouping {
  PerTriple,
  /// Equations with equal target summed; only for auditing published tables.
  ByTarget,
};

struct Config {
  bool direct_sum_filter = true;
  bool invertible_filter = true;
  bool positivity_filter = true;
  bool ordered_type_filter = true;
  bool jacobi_screen = true;
  bool strict_positivity = false;
  /// When off, every survivor of the linear filters is reported as a candidate.
  bool resolve = true;
  JacobiGrouping grouping = JacobiGrouping::PerTriple;
  unsigned jobs = 1;
};

namespace filter {
inline constexpr const char* kDirectSum = "direct-sum";
inline constexpr const char* kAbelian = "abelian";
inline constexpr const char* kInvertible = "invertible-obstruction";
inline constexpr const char* kInconsistent = "inconsistent-system";
inline constexpr const char* kPositivity = "positivity";
inline constexpr const char* kOrderedType = "ordered-type";
inline constexpr const char* kStrictPositivity = "strict-positivity";
inline constexpr const char* kJacobiScreen = "jacobi-screen";
inline constexpr const char* kResolve = "resolve";
}  // namespace filter

struct ClassificationRecord {
  IndexSet index_set;
  std::size_t m = 0;
  /// Absent for excluded records, which never reach the Gram stage.
  std::optional<std::size_t> nullity;
  bool invertible = false;
  Verdict verdict;
  /// Filters in the order they ran; the last one decided a pruned record.
  std::vector<std::string> filters;
  std::optional<std::string> pruned_by;
};

struct NullityCounts {
  std::size_t solitons = 0;
  std::size_t candidates = 0;
  std::size_t nonsolitons = 0;

  friend bool operator==(const NullityCounts&, const NullityCounts&) = default;
};

struct Report {
  int n = 0;
  Config config;
  std::vector<ClassificationRecord> records;

  std::map<std::size_t, NullityCounts> counts() const;
  std::size_t excluded() const;
  std::size_t invertible_solitons() const;
  std::vector<const ClassificationRecord*> with_status(Status s) const;
};

std::vector<JacobiEquation> jacobi_equations(const IndexSet& s, JacobiGrouping g);

ClassificationRecord classify(const IndexSet& s, const Config& config);

/// All masks over theta(n) in ascending order. Throws std::invalid_argument
/// for n < 3 or n > kMaxDimension.
Report run(int n, const Config& config);

/// Re-derives the reason a record was rejected. True when the record is not
/// a NonSoliton or its refutation checks out.
bool replay_record(const ClassificationRecord& r, const Config& config);

}  // namespace nilsol
