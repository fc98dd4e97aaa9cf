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
#include "nilsol/lp.hpp"

#include <stdexcept>

namespace nilsol {

SimplexResult simplex_max(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("simplex dimensions disagree");
  for (const auto& x : b)
    if (x.sign() < 0) throw std::invalid_argument("simplex needs a feasible origin");

  // columns: n structural, m slack, then rhs
  const std::size_t width = n + m + 1;
  RationalMatrix t(m + 1, width, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t(r, j) = a(r, j);
    t(r, n + r) = Rational(1);
    t(r, width - 1) = b[r];
  }
  for (std::size_t j = 0; j < n; ++j) t(m, j) = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  SimplexResult out;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter).sign() <= 0) continue;
      const Rational ratio = t(r, width - 1) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) {
      out.bounded = false;
      return out;
    }
    const Rational inv = t(leave, enter).inverse();
    for (std::size_t j = 0; j < width; ++j)
      if (!t(leave, j).is_zero()) t(leave, j) *= inv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t(r, enter).is_zero()) continue;
      const Rational f = t(r, enter);
      for (std::size_t j = 0; j < width; ++j)
        if (!t(leave, j).is_zero()) t(r, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  out.value = t(m, width - 1);
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) out.x[basis[r]] = t(r, width - 1);
  out.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) out.dual[r] = t(m, n + r);
  return out;
}

Rational evaluate_form(const AffineForm& f, const RationalVector& u) {
  if (f.size() != u.size() + 1) throw std::invalid_argument("form and point disagree");
  Rational acc = f[0];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!f[i + 1].is_zero()) acc += f[i + 1] * u[i];
  return acc;
}

PositivityResult strict_positivity(const std::vector<AffineForm>& forms, std::size_t dims) {
  PositivityResult out;
  Rational m0(1);
  for (const auto& f : forms) {
    if (f.size() != dims + 1) throw std::invalid_argument("form has the wrong dimension");
    if (f[0] < m0) m0 = f[0];
  }
  // variables u+ (dims), u- (dims), sigma = s - m0 >= 0
  const std::size_t nv = 2 * dims + 1;
  RationalMatrix a(forms.size() + 1, nv, Rational(0));
  RationalVector b;
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (std::size_t i = 0; i < dims; ++i) {
      a(r, i) = -forms[r][i + 1];
      a(r, dims + i) = forms[r][i + 1];
    }
    a(r, 2 * dims) = Rational(1);
    b.push_back(forms[r][0] - m0);
  }
  a(forms.size(), 2 * dims) = Rational(1);
  b.push_back(Rational(1) - m0);
  RationalVector c(nv, Rational(0));
  c[2 * dims] = Rational(1);

  const auto res = simplex_max(a, b, c);
  if (!res.bounded) throw std::logic_error("positivity LP unbounded");
  out.slack = res.value + m0;
  if (out.slack.sign() > 0) {
    out.feasible = true;
    out.point.resize(dims);
    for (std::size_t i = 0; i < dims; ++i) out.point[i] = res.x[i] - res.x[dims + i];
    return out;
  }
  RationalVector y(res.dual.begin(), res.dual.begin() + static_cast<std::ptrdiff_t>(forms.size()));
  const Rational k = content(y);
  if (!k.is_zero())
    for (auto& v : y) v /= k;
  if (!check_farkas(forms, y)) throw std::logic_error("positivity LP produced an invalid certificate");
  out.farkas = std::move(y);
  return out;
}

bool check_farkas(const std::vector<AffineForm>& forms, const RationalVector& y) {
  if (y.size() != forms.size() || forms.empty()) return false;
  bool nonzero = false;
  for (const auto& v : y) {
    if (v.sign() < 0) return false;
    nonzero = nonzero || !v.is_zero();
  }
  if (!nonzero) return false;
  AffineForm sum(forms[0].size(), Rational(0));
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].size() != sum.size()) return false;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[r] * forms[r][i];
  }
  for (std::size_t i = 1; i < sum.size(); ++i)
    if (!sum[i].is_zero()) return false;
  return sum[0].sign() <= 0;
}

std::optional<Rational> maximize_over(const std::vector<AffineForm>& forms, const RationalVector& objective,
                                      const RationalVector& feasible_point) {
  const std::size_t dims = objective.size();
  RationalMatrix a(forms.size(), 2 * dims, Rational(0));
  RationalVector b;
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (std::size_t i = 0; i < dims; ++i) {
      a(r, i) = -forms[r][i + 1];
      a(r, dims + i) = forms[r][i + 1];
    }
    b.push_back(evaluate_form(forms[r], feasible_point));
    if (b.back().sign() < 0) throw std::invalid_argument("start point is not feasible");
  }
  RationalVector c(2 * dims, Rational(0));
  Rational base(0);
  for (std::size_t i = 0; i < dims; ++i) {
    c[i] = objective[i];
    c[dims + i] = -objective[i];
    base += objective[i] * feasible_point[i];
  }
  const auto res = simplex_max(a, b, c);
  if (!res.bounded) return std::nullopt;
  return res.value + base;
}

}  // namespace nilsol
