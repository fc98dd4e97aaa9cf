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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nilsol {

/// Bracket position [X_i, X_j] = alpha * X_k with i < j < k.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  bool ordered_type() const { return i < j && k == i + j; }
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

using Mask = std::uint64_t;

/// Largest dimension whose admissible triples still fit in a Mask.
inline constexpr int kMaxDimension = 16;

/// All (i, j, i+j) with 1 <= i < j and i + j <= n, in dictionary order.
/// Empty for n < 3.
std::vector<Triple> theta(int n);

/// Position of t in theta(n), or -1.
int theta_position(const Triple& t, int n);

/// A subset of theta(n). Bit b of the mask is the b-th triple of theta(n)
/// (least significant bit = first triple in dictionary order).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<Triple> triples);

  static IndexSet decode(Mask mask, int n);

  /// Accepts "i,j,k;i,j,k;..." or a decimal mask.
  static IndexSet parse(std::string_view text, int n);

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const;

  /// Row of t in the root matrix, or -1.
  int position(const Triple& t) const;

  /// "i,j,k;i,j,k;..." (empty string for the empty set).
  std::string str() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }

 private:
  int n_ = 0;
  Mask mask_ = 0;
  std::vector<Triple> triples_;
};

inline Mask encode(const IndexSet& s) { return s.mask(); }
inline IndexSet decode(Mask mask, int n) { return IndexSet::decode(mask, n); }

/// True when the bracket table splits off a direct factor: either some basis
/// index is untouched by every triple (abelian factor), or the hypergraph on
/// {1..n} whose edges are the triples is disconnected.
bool has_direct_sum_factor(const IndexSet& s);

}  // namespace nilsol
