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
#include "nilsol/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nilsol/matrix.hpp"

namespace nilsol {

UPoly::UPoly(RationalVector coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(RationalVector{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  RationalVector d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const { return is_zero() ? *this : *this * leading().inverse(); }

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalVector out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

namespace {

std::string monomial_coeff(const Rational& c, bool first, bool has_var) {
  std::string s;
  if (first) {
    if (c.sign() < 0) s += "-";
  } else {
    s += c.sign() < 0 ? " - " : " + ";
  }
  const Rational a = c.abs();
  if (!has_var || a != Rational(1)) s += a.str() + (has_var ? "*" : "");
  return s;
}

}  // namespace

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    s += monomial_coeff(c, first, i > 0);
    if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalVector r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  RationalVector q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = b.leading().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<Integer> primitive_integer(const UPoly& f) {
  if (f.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const UPoly& f) {
  Rational m(0);
  const Rational lc = f.leading().abs();
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, f.coeff(i).abs() / lc);
  return m + Rational(1);
}

}  // namespace

int count_roots(const UPoly& f, const Rational& a, const Rational& b) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has infinitely many roots");
  const UPoly g = squarefree_part(f);
  if (g.degree() <= 0 || !(a < b)) return 0;
  const auto seq = sturm_sequence(g);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational simplest_rational(const Rational& a, const Rational& b) {
  if (b < a) return simplest_rational(b, a);
  if (a.sign() <= 0 && b.sign() >= 0) return Rational(0);
  if (b.sign() < 0) return -simplest_rational(-b, -a);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
  const Rational f(fl);
  if (f == a) return a;
  if (f + Rational(1) <= b) return f + Rational(1);
  return f + simplest_rational((b - f).inverse(), (a - f).inverse()).inverse();
}

std::vector<RootInterval> real_roots(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has infinitely many roots");
  std::vector<RootInterval> out;
  const UPoly g = squarefree_part(f);
  if (g.degree() <= 0) return out;
  const auto seq = sturm_sequence(g);
  const auto prim = primitive_integer(g);
  const Rational lc(prim.back());
  const Rational target = (lc * lc).inverse();
  auto count = [&](const Rational& a, const Rational& b) { return sign_variations(seq, a) - sign_variations(seq, b); };

  std::function<void(Rational, Rational, int)> isolate = [&](Rational lo, Rational hi, int k) {
    if (k == 0) return;
    if (k == 1) {
      if (g.eval(hi).is_zero()) {
        out.push_back({hi, hi, true});
        return;
      }
      while (hi - lo >= target) {
        const Rational mid = (lo + hi) / Rational(2);
        if (g.eval(mid).is_zero()) {
          out.push_back({mid, mid, true});
          return;
        }
        if (count(lo, mid) == 1) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const Rational r = simplest_rational(lo, hi);
      if (g.eval(r).is_zero()) {
        out.push_back({r, r, true});
      } else {
        out.push_back({lo, hi, false});
      }
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int left = count(lo, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, k - left);
  };
  const Rational b = cauchy_bound(g);
  isolate(-b, b, count(-b, b));
  return out;
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::affine(const RationalVector& form) {
  if (form.empty()) throw std::invalid_argument("affine form needs a constant term");
  const std::size_t d = form.size() - 1;
  MPoly p = constant(d, form[0]);
  for (std::size_t i = 0; i < d; ++i) {
    Monomial m(d, 0);
    m[i] = 1;
    p.add(m, form[i + 1]);
  }
  return p;
}

void MPoly::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m[var]);
  return d;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) {
      MPoly::Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

Rational MPoly::eval(const RationalVector& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("point has the wrong dimension");
  Rational acc(0);
  for (const auto& [m, c] : t_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= x[i];
    acc += term;
  }
  return acc;
}

UPoly MPoly::to_univariate() const {
  if (nvars_ != 1) throw std::invalid_argument("not a univariate polynomial");
  RationalVector c(static_cast<std::size_t>(std::max(0, degree_in(0) + 1)), Rational(0));
  for (const auto& [m, v] : t_) c[static_cast<std::size_t>(m[0])] = v;
  return UPoly(std::move(c));
}

MPoly MPoly::substitute(std::size_t var, const Rational& value) const {
  MPoly out(nvars_);
  for (const auto& [m, c] : t_) {
    Rational f = c;
    for (int e = 0; e < m[var]; ++e) f *= value;
    Monomial r(m);
    r[var] = 0;
    out.add(r, f);
  }
  return out;
}

std::vector<UPoly> MPoly::as_poly_in(std::size_t var) const {
  if (nvars_ != 2) throw std::invalid_argument("expected a bivariate polynomial");
  const std::size_t other = 1 - var;
  const int d = degree_in(var);
  std::vector<RationalVector> raw(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [m, c] : t_) {
    auto& slot = raw[static_cast<std::size_t>(m[var])];
    const auto e = static_cast<std::size_t>(m[other]);
    if (slot.size() <= e) slot.resize(e + 1, Rational(0));
    slot[e] += c;
  }
  std::vector<UPoly> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

bool MPoly::proportional_to(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (t_.size() != o.t_.size()) return false;
  const Rational ratio = t_.begin()->second / o.t_.begin()->second;
  for (auto a = t_.begin(), b = o.t_.begin(); a != t_.end(); ++a, ++b)
    if (a->first != b->first || a->second != ratio * b->second) return false;
  return true;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool has_var = false;
    std::string vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (has_var) vars += "*";
      vars += "t" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
      has_var = true;
    }
    s += monomial_coeff(c, first, has_var) + vars;
    first = false;
  }
  return s;
}

UPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  const auto fc = f.as_poly_in(var);
  const auto gc = g.as_poly_in(var);
  if (fc.empty() || gc.empty()) return {};
  const std::size_t p = fc.size() - 1;
  const std::size_t q = gc.size() - 1;
  const std::size_t size = p + q;
  if (size == 0) return UPoly(Rational(1));
  Matrix<UPoly> s(size, size);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t i = 0; i <= p; ++i) s(r, r + i) = fc[p - i];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t i = 0; i <= q; ++i) s(q + r, r + i) = gc[q - i];

  // fraction-free elimination over Q[x]
  UPoly prev(Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t piv = k;
    while (piv < size && s(piv, k).is_zero()) ++piv;
    if (piv == size) return {};
    if (piv != k) {
      s.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) s(i, j) = exact_div(s(i, j) * s(k, k) - s(i, k) * s(k, j), prev);
      s(i, k) = UPoly();
    }
    prev = s(k, k);
  }
  return s(size - 1, size - 1) * Rational(sign);
}

}  // namespace nilsol
