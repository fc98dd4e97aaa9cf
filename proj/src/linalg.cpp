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
#include "nilsol/linalg.hpp"

#include <stdexcept>

namespace nilsol {

RationalMatrix to_rational(const IntMatrix& m) {
  return m.map([](int x) { return Rational(x); });
}

namespace {

/// Forward fraction-free elimination to row echelon form. Every entry stays
/// a minor of the input, so the division by the previous pivot is exact.
std::vector<std::size_t> bareiss_echelon(Matrix<Integer>& a) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    const Integer pivot = a(row, col);
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      for (std::size_t c = col + 1; c < a.cols(); ++c) {
        Integer t = a(r, c) * pivot - a(r, col) * a(row, c);
        mpz_divexact(a(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix<Integer> a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = m(r, c).num() * (l / m(r, c).den());
  }
  RrefResult out;
  out.pivots = bareiss_echelon(a);
  out.rank = out.pivots.size();
  out.reduced = RationalMatrix(rows, cols, Rational(0));
  for (std::size_t r = 0; r < out.rank; ++r) {
    const Rational inv = Rational(a(r, out.pivots[r])).inverse();
    for (std::size_t c = out.pivots[r]; c < cols; ++c)
      if (a(r, c) != 0) out.reduced(r, c) = Rational(a(r, c)) * inv;
  }
  // back substitution, bottom pivot first
  for (std::size_t k = out.rank; k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    for (std::size_t r = 0; r < k; ++r) {
      const Rational f = out.reduced(r, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < cols; ++c)
        if (!out.reduced(k, c).is_zero()) out.reduced(r, c) -= f * out.reduced(k, c);
    }
  }
  return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector k(m.cols(), Rational(0));
    k[f] = Rational(1);
    for (std::size_t r = 0; r < red.rank; ++r) k[red.pivots[r]] = -red.reduced(r, f);
    basis.push_back(std::move(k));
  }
  return basis;
}

std::optional<AffineSolutionSet> solve_affine(const GramMatrix& u) {
  const std::size_t m = u.size();
  RationalMatrix aug(m, m + 1, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug(r, c) = Rational(u(r, c));
    aug(r, m) = Rational(1);
  }
  const auto red = rref(aug);
  if (red.rank > 0 && red.pivots.back() == m) return std::nullopt;

  AffineSolutionSet s;
  s.v0.assign(m, Rational(0));
  for (std::size_t r = 0; r < red.rank; ++r) s.v0[red.pivots[r]] = red.reduced(r, m);

  std::vector<bool> is_pivot(m, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    RationalVector k(m, Rational(0));
    k[f] = Rational(1);
    for (std::size_t r = 0; r < red.rank; ++r) k[red.pivots[r]] = -red.reduced(r, f);
    s.kernel.push_back(std::move(k));
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool fixed = true;
    for (const auto& k : s.kernel) fixed = fixed && k[i].is_zero();
    if (fixed) s.fixed_coordinates.push_back(i);
  }
  return s;
}

bool kernel_equal(const IntMatrix& yt, const GramMatrix& u) {
  if (yt.cols() != u.size()) throw std::invalid_argument("Y^T and U disagree on m");
  const auto ker_yt = kernel_basis(to_rational(yt));
  const auto ker_u = kernel_basis(to_rational(u.entries));
  if (ker_yt.size() != ker_u.size()) return false;
  for (const auto& k : ker_u)
    for (const auto& x : multiply(yt, k))
      if (!x.is_zero()) return false;
  for (const auto& k : ker_yt)
    for (const auto& x : multiply(u.entries, k))
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace nilsol
