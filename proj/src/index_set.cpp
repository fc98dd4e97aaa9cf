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
#include "nilsol/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace nilsol {

std::string to_string(const Triple& t) {
  return std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k);
}

std::vector<Triple> theta(int n) {
  std::vector<Triple> out;
  if (n < 3) return out;
  if (n > kMaxDimension) throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds supported maximum");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= n; ++j) out.push_back({i, j, i + j});
  return out;
}

int theta_position(const Triple& t, int n) {
  if (!t.ordered_type() || t.i < 1 || t.k > n) return -1;
  // triples with smaller i come first: for each i' < i there are n - 2i' of them
  int pos = 0;
  for (int a = 1; a < t.i; ++a) pos += std::max(0, n - 2 * a);
  return pos + (t.j - t.i - 1);
}

IndexSet::IndexSet(int n, std::vector<Triple> triples) : n_(n), triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  for (const auto& t : triples_) {
    const int pos = theta_position(t, n);
    if (pos < 0) throw std::invalid_argument("triple (" + to_string(t) + ") is not admissible for n=" + std::to_string(n));
    mask_ |= Mask{1} << pos;
  }
}

IndexSet IndexSet::decode(Mask mask, int n) {
  const auto all = theta(n);
  if (all.size() < 64 && (mask >> all.size()) != 0) throw std::invalid_argument("mask out of range for n=" + std::to_string(n));
  std::vector<Triple> picked;
  for (std::size_t b = 0; b < all.size(); ++b)
    if ((mask >> b) & 1U) picked.push_back(all[b]);
  return IndexSet(n, std::move(picked));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("malformed index set '" + std::string(whole) + "'");
  return v;
}

}  // namespace

IndexSet IndexSet::parse(std::string_view text, int n) {
  const auto body = trim(text);
  if (body.empty()) return IndexSet(n, {});
  if (body.find(',') == std::string_view::npos) {
    Mask m = 0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), m);
    if (ec != std::errc() || p != body.data() + body.size())
      throw std::invalid_argument("malformed index set '" + std::string(text) + "'");
    return decode(m, n);
  }
  std::vector<Triple> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto end = std::min(body.find(';', start), body.size());
    const auto item = trim(body.substr(start, end - start));
    if (!item.empty()) {
      const auto c1 = item.find(',');
      const auto c2 = item.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
      if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw std::invalid_argument("malformed triple '" + std::string(item) + "'");
      out.push_back({parse_int(item.substr(0, c1), text), parse_int(item.substr(c1 + 1, c2 - c1 - 1), text),
                     parse_int(item.substr(c2 + 1), text)});
    }
    start = end + 1;
  }
  return IndexSet(n, std::move(out));
}

bool IndexSet::contains(const Triple& t) const {
  const int pos = theta_position(t, n_);
  return pos >= 0 && ((mask_ >> pos) & 1U);
}

int IndexSet::position(const Triple& t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) return -1;
  return static_cast<int>(it - triples_.begin());
}

std::string IndexSet::str() const {
  std::string out;
  for (const auto& t : triples_) {
    if (!out.empty()) out += ';';
    out += to_string(t);
  }
  return out;
}

bool has_direct_sum_factor(const IndexSet& s) {
  const int n = s.n();
  if (n <= 0) return false;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(n + 1, false);
  for (const auto& t : s.triples()) {
    used[t.i] = used[t.j] = used[t.k] = true;
    parent[find(t.j)] = find(t.i);
    parent[find(t.k)] = find(t.i);
  }
  for (int x = 1; x <= n; ++x)
    if (!used[x]) return true;
  const int root = find(1);
  for (int x = 2; x <= n; ++x)
    if (find(x) != root) return true;
  return false;
}

}  // namespace nilsol
