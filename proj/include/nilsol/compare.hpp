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
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilsol/pipeline.hpp"

namespace nilsol {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureRow {
  int row = 0;
  int line = 0;
  std::string brackets;
  IndexSet index_set;
  /// The printed coefficients, taken at face value.
  BracketTable table;
  std::string index;
  std::size_t nullity = 0;
};

struct FixtureTable {
  std::string file;
  std::string title;
  int n = 0;
  std::vector<FixtureRow> rows;
};

/// "row | brackets | index | nullity" lines after '#' comments. Summands
/// are placed by their index pair, so misnumbered entries are tolerated.
FixtureTable load_fixture_table(const std::filesystem::path& path);

/// "nullity | count" lines.
std::map<std::size_t, std::size_t> load_fixture_counts(const std::filesystem::path& path);

struct NullityComparison {
  std::size_t nullity = 0;
  std::optional<std::size_t> reference_count;
  std::size_t generated = 0;
  /// Whether explicit reference rows exist for this nullity.
  bool listed = false;
  std::vector<Mask> only_reference;
  std::vector<Mask> only_generated;
  /// Row numbers of reference rows repeating an earlier row.
  std::vector<std::pair<int, int>> duplicates;
  std::size_t row_diff = 0;
};

struct Comparison {
  int n = 0;
  std::vector<NullityComparison> candidates;
  std::vector<Mask> solitons_only_reference;
  std::vector<Mask> solitons_only_generated;
  /// One line per discrepancy.
  std::vector<std::string> items;

  std::size_t max_row_diff() const;
};

/// Set differences between a report and the reference tables in dir.
/// Throws FixtureError naming the table when one is missing.
Comparison compare_with_reference(const Report& r, const std::filesystem::path& dir);

std::string render_comparison(const Comparison& c);

}  // namespace nilsol
