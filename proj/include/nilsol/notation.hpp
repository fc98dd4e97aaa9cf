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

#include <stdexcept>
#include <string>
#include <string_view>

#include "nilsol/jacobi.hpp"

namespace nilsol {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// "(0,0,sqrt(22).12,6.13,...)": entry k lists the summands coef.ij of
/// [X_i, X_j] = coef X_k. Negative coefficients are written with '-'.
/// Requires n <= 9 (single-digit indices).
std::string render_vector_notation(const BracketTable& b);

struct NotationOptions {
  /// Dimension; 0 takes the number of tuple entries.
  int n = 0;
  /// Require every summand ij to sit in entry i + j and the entry count to
  /// equal n. When off, the target is taken from ij alone.
  bool check_positions = true;
};

/// Accepts sqrt(..) or the radical sign, '.', '*' or the middle dot as the
/// separator, and '-' or the minus sign. Throws ParseError.
BracketTable parse_vector_notation(std::string_view text, const NotationOptions& options = {});

/// A bracket table file: '#' comment lines, then either one tuple in vector
/// notation or a JSON object {"n": .., "brackets": [{"triple": [i,j,k],
/// "coefficient": ".."}]} or {"vector": ".."}.
BracketTable parse_bracket_file(std::string_view text);

/// Coefficient grammar shared with the vector notation: p, p/q, sqrt(p/q).
SignedSqrt parse_coefficient(std::string_view text);

}  // namespace nilsol
