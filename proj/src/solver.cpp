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
#include "nilsol/solver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nilsol {

std::string to_string(Status s) {
  switch (s) {
    case Status::Soliton: return "soliton";
    case Status::NonSoliton: return "nonsoliton";
    case Status::Candidate: return "candidate";
    case Status::Excluded: return "excluded";
  }
  return "unknown";
}

std::optional<Status> parse_status(const std::string& s) {
  for (auto st : {Status::Soliton, Status::NonSoliton, Status::Candidate, Status::Excluded})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

ParameterizedSquares parameterize(const AffineSolutionSet& s) {
  ParameterizedSquares p;
  p.params = s.dimension();
  for (std::size_t r = 0; r < s.v0.size(); ++r) {
    AffineForm f{s.v0[r]};
    for (const auto& k : s.kernel) f.push_back(k[r]);
    p.coord.push_back(std::move(f));
  }
  return p;
}

std::vector<MPoly> derive_sign_square_relations(const std::vector<JacobiEquation>& eqs, const IndexSet& lambda,
                                                const ParameterizedSquares& p) {
  std::vector<MPoly> out;
  for (const auto& eq : eqs) {
    if (eq.terms.size() != 2) continue;
    auto product = [&](const JacobiTerm& t) {
      return MPoly::affine(p.coord.at(static_cast<std::size_t>(lambda.position(t.first)))) *
             MPoly::affine(p.coord.at(static_cast<std::size_t>(lambda.position(t.second))));
    };
    out.push_back(product(eq.terms[0]) - product(eq.terms[1]));
  }
  return out;
}

namespace {

bool is_constant(const AffineForm& f) {
  return std::all_of(f.begin() + 1, f.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_zero_form(const AffineForm& f) {
  return std::all_of(f.begin(), f.end(), [](const Rational& x) { return x.is_zero(); });
}

/// f = lambda * g for nonzero forms.
std::optional<Rational> proportionality(const AffineForm& f, const AffineForm& g) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero() != g[i].is_zero()) return std::nullopt;
    if (f[i].is_zero()) continue;
    const Rational q = f[i] / g[i];
    if (ratio && *ratio != q) return std::nullopt;
    ratio = q;
  }
  return ratio;
}

AffineForm form_of(const MPoly& p) {
  AffineForm f(p.nvars() + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    std::size_t deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) var = i;
      deg += static_cast<std::size_t>(m[i]);
    }
    if (deg == 0) {
      f[0] = c;
    } else if (deg == 1) {
      f[var + 1] = c;
    } else {
      throw std::logic_error("polynomial is not affine");
    }
  }
  return f;
}

std::string form_str(const AffineForm& f) { return MPoly::affine(f).str(); }

std::string square_name(const Triple& t) { return "a(" + to_string(t) + ")^2"; }

/// Coordinates as affine forms in the reduced parameters.
struct State {
  std::size_t dims = 0;
  std::vector<AffineForm> coord;
};

/// Eliminates the last parameter with a nonzero coefficient in rel.
State substitute(const State& st, const AffineForm& rel) {
  std::size_t pivot = st.dims;
  while (pivot > 0 && rel[pivot].is_zero()) --pivot;
  if (pivot == 0) throw std::logic_error("relation has no parameter to eliminate");
  // u_pivot = -(rel without pivot) / rel[pivot]
  AffineForm expr(rel.size(), Rational(0));
  const Rational inv = -rel[pivot].inverse();
  for (std::size_t i = 0; i < rel.size(); ++i)
    if (i != pivot) expr[i] = rel[i] * inv;
  State out;
  out.dims = st.dims - 1;
  for (const auto& f : st.coord) {
    AffineForm g;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i == pivot) continue;
      g.push_back(f[i] + f[pivot] * expr[i]);
    }
    out.coord.push_back(std::move(g));
  }
  return out;
}

struct Derived {
  enum Kind { None, Linear, OppositeSign } kind = None;
  AffineForm relation;
  std::string text;
};

Derived derive(const JacobiEquation& eq, const IndexSet& lambda, const State& st) {
  Derived d;
  if (eq.terms.size() != 2) return d;
  auto form = [&](const Triple& t) { return st.coord.at(static_cast<std::size_t>(lambda.position(t))); };
  const AffineForm p[2] = {form(eq.terms[0].first), form(eq.terms[0].second)};
  const AffineForm q[2] = {form(eq.terms[1].first), form(eq.terms[1].second)};
  const Triple pt[2] = {eq.terms[0].first, eq.terms[0].second};
  const Triple qt[2] = {eq.terms[1].first, eq.terms[1].second};
  const std::string head = "squaring " + eq.str() + ": ";
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (is_zero_form(p[a]) || is_zero_form(q[b])) continue;
      const auto lam = proportionality(p[a], q[b]);
      if (!lam) continue;
      if (lam->sign() < 0) {
        d.kind = Derived::OppositeSign;
        d.text = head + square_name(pt[a]) + " = " + lam->str() + " * " + square_name(qt[b]) +
                 " cannot have both sides positive";
        return d;
      }
      AffineForm rel(p[1 - a].size());
      for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = *lam * p[1 - a][i] - q[1 - b][i];
      d.kind = Derived::Linear;
      d.relation = std::move(rel);
      d.text = head + square_name(pt[a]) + " = " + lam->str() + " * " + square_name(qt[b]) + " leaves " +
               lam->str() + " * " + square_name(pt[1 - a]) + " = " + square_name(qt[1 - b]);
      return d;
    }
  }
  const MPoly g = MPoly::affine(p[0]) * MPoly::affine(p[1]) - MPoly::affine(q[0]) * MPoly::affine(q[1]);
  if (g.is_zero() || g.total_degree() > 1) return d;
  d.kind = Derived::Linear;
  d.relation = form_of(g);
  d.text = head + "the squared relation is affine";
  return d;
}

std::optional<RefutationStep> nonpositive_coordinate(const State& st, const IndexSet& lambda) {
  for (std::size_t r = 0; r < st.coord.size(); ++r) {
    if (!is_constant(st.coord[r]) || st.coord[r][0].sign() > 0) continue;
    RefutationStep step;
    step.kind = "nonpositive";
    step.coordinate = static_cast<int>(r);
    step.text = square_name(lambda.triples()[r]) + " is forced to " + st.coord[r][0].str();
    return step;
  }
  return std::nullopt;
}

/// Propagation outcome: either a terminal refutation step or the final state.
struct Propagation {
  State state;
  std::vector<RefutationStep> steps;
  bool refuted = false;
};

Propagation propagate(const IndexSet& lambda, const State& start, const std::vector<JacobiEquation>& eqs) {
  Propagation out{start, {}, false};
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    if (eqs[e].terms.size() != 1) continue;
    RefutationStep step;
    step.kind = "single-term";
    step.equation = static_cast<int>(e);
    step.text = eqs[e].str() + " has a single term, but both constants are nonzero";
    out.steps.push_back(std::move(step));
    out.refuted = true;
    return out;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      const Derived d = derive(eqs[e], lambda, out.state);
      if (d.kind == Derived::None) continue;
      RefutationStep step;
      step.equation = static_cast<int>(e);
      if (d.kind == Derived::OppositeSign) {
        step.kind = "opposite-sign";
        step.text = d.text;
        out.steps.push_back(std::move(step));
        out.refuted = true;
        return out;
      }
      if (is_constant(d.relation)) {
        if (d.relation[0].is_zero()) continue;
        step.kind = "constant";
        step.relation = d.relation;
        step.text = d.text + ", which reduces to " + d.relation[0].str() + " = 0";
        out.steps.push_back(std::move(step));
        out.refuted = true;
        return out;
      }
      step.kind = "linear";
      step.relation = d.relation;
      step.text = d.text + ": " + form_str(d.relation) + " = 0";
      out.steps.push_back(std::move(step));
      out.state = substitute(out.state, d.relation);
      changed = true;
      if (auto bad = nonpositive_coordinate(out.state, lambda)) {
        out.steps.push_back(std::move(*bad));
        out.refuted = true;
        return out;
      }
    }
  }
  return out;
}

RefutationStep farkas_step(const IndexSet& lambda, const State& st, const RationalVector& y) {
  RefutationStep step;
  step.kind = "farkas";
  step.weights = y;
  Rational total(0);
  std::string combo;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r].is_zero()) continue;
    total += y[r] * st.coord[r][0];
    if (!combo.empty()) combo += " + ";
    combo += (y[r] == Rational(1) ? "" : y[r].str() + "*") + square_name(lambda.triples()[r]);
  }
  step.text = combo + " = " + total.str() + " on the whole solution set, so the squares cannot all be positive";
  return step;
}

/// Norm polynomial of an equation: vanishes wherever some choice of signs
/// makes the equation hold. Two terms: P1 - P2; three: (P1+P2-P3)^2 - 4 P1 P2.
std::optional<MPoly> norm_polynomial(const JacobiEquation& eq, const IndexSet& lambda, const State& st) {
  std::vector<MPoly> p;
  for (const auto& t : eq.terms)
    p.push_back(MPoly::affine(st.coord.at(static_cast<std::size_t>(lambda.position(t.first)))) *
                MPoly::affine(st.coord.at(static_cast<std::size_t>(lambda.position(t.second)))));
  if (p.size() == 2) return p[0] - p[1];
  if (p.size() == 3) {
    const MPoly s = p[0] + p[1] - p[2];
    return s * s - p[0] * p[1] * Rational(4);
  }
  return std::nullopt;
}

RationalVector evaluate_all(const State& st, const RationalVector& u) {
  RationalVector x;
  for (const auto& f : st.coord) x.push_back(evaluate_form(f, u));
  return x;
}

std::optional<Certificate> certificate_at(const IndexSet& lambda, const State& st, const RationalVector& u,
                                          const std::vector<JacobiEquation>& eqs, std::vector<std::string>& notes) {
  const RationalVector x = evaluate_all(st, u);
  for (const auto& v : x)
    if (v.sign() <= 0) return std::nullopt;
  const auto signs = find_signs(lambda, x, eqs);
  if (!signs) return std::nullopt;
  const Rational k = content(x);
  RationalVector w;
  for (const auto& v : x) w.push_back(v / k);
  Certificate c;
  c.brackets = BracketTable::from_squares(lambda, w, *signs);
  const auto check = verify_certificate(c.brackets);
  if (!check.valid) {
    std::string why;
    for (const auto& p : check.problems) why += (why.empty() ? "" : "; ") + p;
    notes.push_back("rejected a solution that failed verification: " + why);
    return std::nullopt;
  }
  c.ricci = *check.ricci;
  c.normalization = check.normalization;
  return c;
}

std::string point_str(const RationalVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + u[i].str();
  return s + ")";
}

std::string interval_str(const RootInterval& r) { return "(" + r.lo.str() + ", " + r.hi.str() + "]"; }

struct Bound {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool contains_open(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
};

/// Open interval of the single free parameter where every form is positive.
Bound positive_interval(const std::vector<AffineForm>& forms) {
  Bound b;
  for (const auto& f : forms) {
    if (f[1].is_zero()) continue;
    const Rational root = -f[0] / f[1];
    if (f[1].sign() > 0) {
      if (!b.lo || *b.lo < root) b.lo = root;
    } else if (!b.hi || root < *b.hi) {
      b.hi = root;
    }
  }
  return b;
}

/// Does the irrational root isolated by r lie strictly inside b?
bool irrational_root_inside(const UPoly& g, const RootInterval& r, const Bound& b) {
  const Rational lo = b.lo && r.lo < *b.lo ? *b.lo : r.lo;
  const Rational hi = b.hi && *b.hi < r.hi ? *b.hi : r.hi;
  return lo < hi && count_roots(g, lo, hi) > 0;
}

UPoly univariate_in_second(const MPoly& p) {
  const auto parts = p.as_poly_in(0);
  return parts.empty() ? UPoly() : parts[0];
}

struct Outcome {
  Status status = Status::Candidate;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
  std::string summary;
};

Outcome nonlinear_stage(const IndexSet& lambda, const State& st, const std::vector<JacobiEquation>& eqs,
                        const RationalVector& interior) {
  Outcome out;
  std::vector<MPoly> gs;
  bool long_equations = false;
  for (const auto& eq : eqs) {
    auto g = norm_polynomial(eq, lambda, st);
    if (!g) {
      long_equations = true;
      continue;
    }
    if (g->is_zero()) continue;
    if (std::none_of(gs.begin(), gs.end(), [&](const MPoly& h) { return h.proportional_to(*g); }))
      gs.push_back(std::move(*g));
  }
  if (long_equations) out.notes.push_back("equations with more than three terms are only checked at sample points");

  const std::string dims = std::to_string(st.dims);
  if (st.dims == 0) {
    if (auto c = certificate_at(lambda, st, {}, eqs, out.notes)) {
      out.status = Status::Soliton;
      out.certificate = std::move(c);
      return out;
    }
    out.status = Status::NonSoliton;
    out.summary = "no choice of signs satisfies the Jacobi system at the unique positive solution";
    return out;
  }

  if (gs.empty()) {
    if (auto c = certificate_at(lambda, st, interior, eqs, out.notes)) {
      out.status = Status::Soliton;
      out.certificate = std::move(c);
      return out;
    }
    out.notes.push_back("Jacobi norms vanish identically on a " + dims +
                        "-parameter family; sign search failed at " + point_str(interior));
    return out;
  }

  if (st.dims == 1) {
    UPoly g;
    for (const auto& h : gs) g = gcd(g, h.to_univariate());
    if (g.degree() <= 0) {
      out.status = Status::NonSoliton;
      out.summary = "the Jacobi norm polynomials in t1 have no common root";
      return out;
    }
    const Bound range = positive_interval(st.coord);
    std::vector<std::string> tried;
    bool unresolved = false;
    for (const auto& r : real_roots(g)) {
      if (!r.exact) {
        if (irrational_root_inside(g, r, range)) {
          unresolved = true;
          out.notes.push_back("irrational common root t1 in " + interval_str(r) + " of " + g.str("t1"));
        }
        continue;
      }
      if (!range.contains_open(r.lo)) continue;
      if (auto c = certificate_at(lambda, st, {r.lo}, eqs, out.notes)) {
        out.status = Status::Soliton;
        out.certificate = std::move(c);
        return out;
      }
      tried.push_back(r.lo.str());
    }
    if (unresolved) return out;
    out.status = Status::NonSoliton;
    out.summary = "common roots of the Jacobi norms in the positive range: " +
                  (tried.empty() ? std::string("none") : "t1 = " + [&] {
                    std::string s;
                    for (const auto& t : tried) s += (s.empty() ? "" : ", ") + t;
                    return s;
                  }() + " (no consistent signs)");
    return out;
  }

  if (st.dims == 2) {
    if (gs.size() < 2) {
      if (gs[0].eval(interior).is_zero())
        if (auto c = certificate_at(lambda, st, interior, eqs, out.notes)) {
          out.status = Status::Soliton;
          out.certificate = std::move(c);
          return out;
        }
      out.notes.push_back("solution set is a curve " + gs[0].str() + " = 0");
      return out;
    }
    UPoly res;
    for (std::size_t a = 0; a < gs.size() && res.degree() != 0; ++a)
      for (std::size_t b = a + 1; b < gs.size() && res.degree() != 0; ++b) {
        const UPoly r = resultant(gs[a], gs[b], 1);
        if (!r.is_zero()) res = gcd(res, r);
      }
    if (res.is_zero()) {
      out.notes.push_back("Jacobi norms share a common factor; solution set contains a curve");
      return out;
    }
    if (res.degree() == 0) {
      out.status = Status::NonSoliton;
      out.summary = "the resultants of the Jacobi norms have no common root";
      return out;
    }
    Bound range1;
    range1.lo = maximize_over(st.coord, {Rational(-1), Rational(0)}, interior);
    if (range1.lo) range1.lo = -*range1.lo;
    range1.hi = maximize_over(st.coord, {Rational(1), Rational(0)}, interior);
    bool unresolved = false;
    std::vector<std::string> tried;
    for (const auto& r : real_roots(res)) {
      if (!r.exact) {
        if (irrational_root_inside(res, r, range1)) {
          unresolved = true;
          out.notes.push_back("irrational t1 in " + interval_str(r) + " from resultant " + res.str("t1"));
        }
        continue;
      }
      if ((range1.lo && r.lo < *range1.lo) || (range1.hi && *range1.hi < r.lo)) continue;
      UPoly h;
      for (const auto& g : gs) h = gcd(h, univariate_in_second(g.substitute(0, r.lo)));
      if (h.is_zero()) {
        unresolved = true;
        out.notes.push_back("Jacobi norms vanish on the line t1 = " + r.lo.str());
        continue;
      }
      if (h.degree() == 0) continue;
      std::vector<AffineForm> line;
      for (const auto& f : st.coord) line.push_back({f[0] + f[1] * r.lo, f[2]});
      const Bound range2 = positive_interval(line);
      for (const auto& s : real_roots(h)) {
        if (!s.exact) {
          if (irrational_root_inside(h, s, range2)) {
            unresolved = true;
            out.notes.push_back("irrational t2 in " + interval_str(s) + " at t1 = " + r.lo.str());
          }
          continue;
        }
        if (!range2.contains_open(s.lo)) continue;
        if (auto c = certificate_at(lambda, st, {r.lo, s.lo}, eqs, out.notes)) {
          out.status = Status::Soliton;
          out.certificate = std::move(c);
          return out;
        }
        tried.push_back(point_str({r.lo, s.lo}));
      }
    }
    if (unresolved) return out;
    out.status = Status::NonSoliton;
    std::string s;
    for (const auto& t : tried) s += (s.empty() ? "" : ", ") + t;
    out.summary = "common roots of the Jacobi norms in the positive region: " +
                  (tried.empty() ? std::string("none") : s + " (no consistent signs)");
    return out;
  }

  out.notes.push_back(dims + " free parameters remain after linear propagation");
  return out;
}

State initial_state(const AffineSolutionSet& s) {
  const auto p = parameterize(s);
  return State{p.params, p.coord};
}

}  // namespace

std::optional<std::vector<int>> find_signs(const IndexSet& lambda, const RationalVector& squares,
                                           const std::vector<JacobiEquation>& eqs) {
  const std::size_t m = lambda.size();
  if (squares.size() != m) throw std::invalid_argument("squares do not match the index set");
  struct Term {
    int coefficient;
    std::size_t a;
    std::size_t b;
    RadicalSum magnitude;
  };
  std::vector<std::vector<Term>> terms(eqs.size());
  std::vector<std::vector<std::size_t>> ready(m);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    std::size_t last = 0;
    for (const auto& t : eqs[e].terms) {
      const auto a = static_cast<std::size_t>(lambda.position(t.first));
      const auto b = static_cast<std::size_t>(lambda.position(t.second));
      terms[e].push_back({t.coefficient, a, b, radical_mul(SignedSqrt(1, squares[a]), SignedSqrt(1, squares[b]))});
      last = std::max({last, a, b});
    }
    if (!terms[e].empty()) ready[last].push_back(e);
  }
  std::vector<int> signs(m, 1);
  std::function<bool(std::size_t)> assign = [&](std::size_t r) -> bool {
    if (r == m) return true;
    for (int s : {1, -1}) {
      signs[r] = s;
      bool ok = true;
      for (auto e : ready[r]) {
        RadicalSum sum;
        for (const auto& t : terms[e]) sum += t.magnitude * Rational(t.coefficient * signs[t.a] * signs[t.b]);
        if (!sum.is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok && assign(r + 1)) return true;
      // constants outside every equation keep +1
      bool used = false;
      for (std::size_t e = 0; e < eqs.size() && !used; ++e)
        for (const auto& t : terms[e]) used = used || t.a == r || t.b == r;
      if (!used) break;
    }
    signs[r] = 1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return signs;
}

CertificateCheck verify_certificate(const BracketTable& c) {
  CertificateCheck out;
  if (c.empty()) {
    out.problems.push_back("abelian table");
    return out;
  }
  out.jacobi_failure = jacobi_bruteforce_failure(c);
  if (out.jacobi_failure) {
    const auto& f = out.jacobi_failure->triple;
    out.problems.push_back("Jacobi identity fails for (X" + std::to_string(f[0]) + ", X" + std::to_string(f[1]) +
                           ", X" + std::to_string(f[2]) + "): " + out.jacobi_failure->value.str());
  }
  const IndexSet s = c.index_set();
  const RationalVector sq = c.squares();
  const auto u = gram(s);
  const auto uv = multiply(u.entries, sq);
  out.normalization = uv[0];
  if (!std::all_of(uv.begin(), uv.end(), [&](const Rational& x) { return x == uv[0]; }))
    out.problems.push_back("U * squares is not a constant vector");
  else if (uv[0].sign() <= 0)
    out.problems.push_back("U * squares is not positive");
  out.ricci = soliton_data(s, sq);
  if (!out.ricci) {
    out.problems.push_back("beta differs between triples");
  } else if (!is_ordered_type(out.ricci->derivation)) {
    out.problems.push_back("derivation is not of type 1 < 2 < ... < n");
  }
  out.valid = out.problems.empty();
  return out;
}

Verdict resolve(const IndexSet& lambda, const AffineSolutionSet& s, const std::vector<JacobiEquation>& eqs) {
  Verdict v;
  const State start = initial_state(s);
  Propagation prop = propagate(lambda, start, eqs);
  Refutation ref;
  ref.steps = prop.steps;
  if (prop.refuted) {
    v.status = Status::NonSoliton;
    ref.reason = ref.steps.back().kind;
    v.refutation = std::move(ref);
    return v;
  }
  const State& st = prop.state;
  if (st.dims < start.dims)
    v.notes.push_back("linear propagation: " + std::to_string(start.dims) + " -> " + std::to_string(st.dims) +
                      " parameters");
  const auto pos = strict_positivity(st.coord, st.dims);
  if (!pos.feasible) {
    v.status = Status::NonSoliton;
    ref.steps.push_back(farkas_step(lambda, st, pos.farkas));
    ref.reason = "farkas";
    v.refutation = std::move(ref);
    return v;
  }
  Outcome o = nonlinear_stage(lambda, st, eqs, pos.point);
  v.notes.insert(v.notes.end(), o.notes.begin(), o.notes.end());
  v.status = o.status;
  if (o.status == Status::Soliton) {
    v.certificate = std::move(o.certificate);
  } else if (o.status == Status::NonSoliton) {
    RefutationStep step;
    step.kind = "nonlinear";
    step.text = o.summary;
    ref.steps.push_back(std::move(step));
    ref.reason = "nonlinear";
    v.refutation = std::move(ref);
  }
  return v;
}

bool replay_refutation(const IndexSet& lambda, const AffineSolutionSet& s, const std::vector<JacobiEquation>& eqs,
                       const Refutation& r) {
  if (r.steps.empty()) return false;
  State st = initial_state(s);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& step = r.steps[i];
    const bool last = i + 1 == r.steps.size();
    const auto eq_index = static_cast<std::size_t>(step.equation);
    if (step.kind == "linear") {
      if (last || step.equation < 0 || eq_index >= eqs.size()) return false;
      const Derived d = derive(eqs[eq_index], lambda, st);
      if (d.kind != Derived::Linear || d.relation != step.relation || is_constant(d.relation)) return false;
      st = substitute(st, d.relation);
      continue;
    }
    if (!last) return false;
    if (step.kind == "single-term") return step.equation >= 0 && eq_index < eqs.size() && eqs[eq_index].terms.size() == 1;
    if (step.kind == "opposite-sign") {
      return step.equation >= 0 && eq_index < eqs.size() &&
             derive(eqs[eq_index], lambda, st).kind == Derived::OppositeSign;
    }
    if (step.kind == "constant") {
      if (step.equation < 0 || eq_index >= eqs.size()) return false;
      const Derived d = derive(eqs[eq_index], lambda, st);
      return d.kind == Derived::Linear && is_constant(d.relation) && !d.relation[0].is_zero();
    }
    if (step.kind == "nonpositive") {
      if (step.coordinate < 0 || static_cast<std::size_t>(step.coordinate) >= st.coord.size()) return false;
      const auto& f = st.coord[static_cast<std::size_t>(step.coordinate)];
      return is_constant(f) && f[0].sign() <= 0;
    }
    if (step.kind == "farkas") return check_farkas(st.coord, step.weights);
    if (step.kind == "nonlinear") {
      const auto pos = strict_positivity(st.coord, st.dims);
      if (!pos.feasible) return false;
      const Outcome o = nonlinear_stage(lambda, st, eqs, pos.point);
      return o.status == Status::NonSoliton && o.summary == step.text;
    }
    return false;
  }
  return false;
}

}  // namespace nilsol
