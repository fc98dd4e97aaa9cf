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
#include "nilsol/serialize.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "nilsol/notation.hpp"

namespace nilsol {

using nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  return std::nullopt;
}

namespace {

ordered_json strings(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string grouping_name(JacobiGrouping g) { return g == JacobiGrouping::ByTarget ? "by-target" : "per-triple"; }

ordered_json config_json(const Config& c) {
  return ordered_json{{"direct_sum_filter", c.direct_sum_filter},
                      {"invertible_filter", c.invertible_filter},
                      {"positivity_filter", c.positivity_filter},
                      {"ordered_type_filter", c.ordered_type_filter},
                      {"jacobi_screen", c.jacobi_screen},
                      {"strict_positivity", c.strict_positivity},
                      {"resolve", c.resolve},
                      {"jacobi_grouping", grouping_name(c.grouping)}};
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["n"] = c.brackets.n();
  if (c.brackets.n() <= 9) j["vector"] = render_vector_notation(c.brackets);
  ordered_json br = ordered_json::array();
  for (const auto& [t, a] : c.brackets.coefficients())
    br.push_back(ordered_json{{"triple", {t.i, t.j, t.k}}, {"coefficient", a.str()}});
  j["brackets"] = br;
  j["normalization"] = c.normalization.str();
  j["beta"] = c.ricci.beta.str();
  j["ricci"] = strings(c.ricci.ricci);
  j["derivation"] = strings(c.ricci.derivation);
  return j;
}

ordered_json refutation_json(const Refutation& r) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json j{{"kind", s.kind}, {"text", s.text}};
    if (s.equation >= 0) j["equation"] = s.equation;
    if (s.coordinate >= 0) j["coordinate"] = s.coordinate;
    if (!s.relation.empty()) j["relation"] = strings(s.relation);
    if (!s.weights.empty()) j["weights"] = strings(s.weights);
    steps.push_back(std::move(j));
  }
  return ordered_json{{"reason", r.reason}, {"steps", steps}};
}

ordered_json record_json(const ClassificationRecord& r) {
  ordered_json j;
  j["mask"] = r.index_set.mask();
  j["triples"] = r.index_set.str();
  j["m"] = r.m;
  j["nullity"] = r.nullity ? ordered_json(*r.nullity) : ordered_json(nullptr);
  j["invertible"] = r.invertible;
  j["verdict"] = to_string(r.verdict.status);
  if (r.verdict.certificate) j["certificate"] = certificate_json(*r.verdict.certificate);
  if (r.verdict.refutation) j["refutation"] = refutation_json(*r.verdict.refutation);
  j["filters"] = r.filters;
  if (r.pruned_by) j["pruned_by"] = *r.pruned_by;
  if (!r.verdict.notes.empty()) j["notes"] = r.verdict.notes;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

const char* kCsvHeader = "mask,triples,m,nullity,invertible,verdict,pruned_by,reason,certificate,filters,notes\n";

std::string csv_row(const ClassificationRecord& r) {
  std::vector<std::string> f;
  f.push_back(std::to_string(r.index_set.mask()));
  f.push_back(r.index_set.str());
  f.push_back(std::to_string(r.m));
  f.push_back(r.nullity ? std::to_string(*r.nullity) : "");
  f.push_back(r.invertible ? "true" : "false");
  f.push_back(to_string(r.verdict.status));
  f.push_back(r.pruned_by.value_or(""));
  f.push_back(r.verdict.refutation && !r.verdict.refutation->steps.empty() ? r.verdict.refutation->steps.back().text
                                                                             : "");
  f.push_back(r.verdict.certificate && r.verdict.certificate->brackets.n() <= 9
                  ? render_vector_notation(r.verdict.certificate->brackets)
                  : "");
  f.push_back(join(r.filters, ";"));
  f.push_back(join(r.verdict.notes, "; "));
  std::string line;
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + csv_field(f[i]);
  return line + "\n";
}

std::string brackets_text(const IndexSet& s, const std::optional<Certificate>& c) {
  if (c && c->brackets.n() <= 9) return render_vector_notation(c->brackets);
  if (s.n() <= 9) {
    BracketTable ones(s.n());
    for (const auto& t : s.triples()) ones.set(t, SignedSqrt(1, Rational(1)));
    return render_vector_notation(ones);
  }
  return s.str();
}

}  // namespace

std::string render_derivation(const RationalVector& d) {
  if (auto c = ordered_type_scale(d)) return c->str() + "*(1,...," + std::to_string(d.size()) + ")";
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].str();
  return s + ")";
}

std::string render_report(const Report& r, Format f) {
  if (f == Format::Json) {
    ordered_json j;
    j["n"] = r.n;
    j["config"] = config_json(r.config);
    ordered_json counts = ordered_json::array();
    for (const auto& [k, c] : r.counts())
      counts.push_back(ordered_json{
          {"nullity", k}, {"solitons", c.solitons}, {"candidates", c.candidates}, {"nonsolitons", c.nonsolitons}});
    j["counts"] = counts;
    j["excluded"] = r.excluded();
    ordered_json recs = ordered_json::array();
    for (const auto& rec : r.records) recs.push_back(record_json(rec));
    j["records"] = std::move(recs);
    return j.dump(1) + "\n";
  }
  if (f == Format::Csv) {
    std::string out = kCsvHeader;
    for (const auto& rec : r.records) out += csv_row(rec);
    return out;
  }
  std::ostringstream os;
  os << "n = " << r.n << ": " << r.records.size() << " index sets, " << r.excluded() << " excluded as decomposable\n";
  const auto sol = r.with_status(Status::Soliton);
  os << "\nsolitons (" << sol.size() << ")\n";
  if (!sol.empty()) {
    os << std::left << std::setw(8) << "mask" << std::setw(9) << "nullity" << "brackets\n";
    for (const auto* p : sol) {
      const auto& c = *p->verdict.certificate;
      os << std::setw(8) << p->index_set.mask() << std::setw(9) << *p->nullity << brackets_text(p->index_set, c)
         << "\n"
         << std::setw(17) << "" << "D = " << render_derivation(c.ricci.derivation) << ", beta = " << c.ricci.beta.str()
         << ", U v = " << c.normalization.str() << "*[1]\n";
    }
  }
  const auto cand = r.with_status(Status::Candidate);
  os << "\ncandidates (" << cand.size() << ")\n";
  if (!cand.empty()) {
    os << std::left << std::setw(8) << "mask" << std::setw(9) << "nullity" << "brackets\n";
    for (const auto* p : cand)
      os << std::setw(8) << p->index_set.mask() << std::setw(9) << *p->nullity
         << brackets_text(p->index_set, std::nullopt) << "\n";
  }
  os << "\n"
     << std::setw(9) << "nullity" << std::setw(10) << "solitons" << std::setw(12) << "candidates" << "nonsolitons\n";
  for (const auto& [k, c] : r.counts())
    os << std::setw(9) << k << std::setw(10) << c.solitons << std::setw(12) << c.candidates << c.nonsolitons << "\n";
  return os.str();
}

std::string render_record(const ClassificationRecord& r, Format f) {
  if (f == Format::Json) return record_json(r).dump(2) + "\n";
  if (f == Format::Csv) return std::string(kCsvHeader) + csv_row(r);
  std::ostringstream os;
  os << "index set: " << r.index_set.str() << " (mask " << r.index_set.mask() << ", n = " << r.index_set.n()
     << ")\n";
  os << "m = " << r.m;
  if (r.nullity) os << ", nullity = " << *r.nullity << (r.invertible ? " (invertible)" : "");
  os << "\nverdict: " << to_string(r.verdict.status);
  if (r.pruned_by) os << " (" << *r.pruned_by << ")";
  os << "\nfilters: " << join(r.filters, ", ") << "\n";
  if (r.verdict.certificate) {
    const auto& c = *r.verdict.certificate;
    os << "brackets: " << brackets_text(r.index_set, c) << "\n";
    os << "U v = " << c.normalization.str() << "*[1], beta = " << c.ricci.beta.str()
       << ", D = " << render_derivation(c.ricci.derivation) << "\n";
  }
  if (r.verdict.refutation)
    for (const auto& s : r.verdict.refutation->steps) os << "  " << s.kind << ": " << s.text << "\n";
  for (const auto& n : r.verdict.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_certificate_check(const BracketTable& b, const CertificateCheck& c) {
  std::ostringstream os;
  if (b.n() <= 9) os << "brackets: " << render_vector_notation(b) << "\n";
  os << "jacobi: " << (c.jacobi_failure ? "fails" : "holds") << "\n";
  if (c.jacobi_failure) {
    const auto& t = c.jacobi_failure->triple;
    os << "  failing triple: (X" << t[0] << ", X" << t[1] << ", X" << t[2] << "), value " << c.jacobi_failure->value.str()
       << "\n";
    for (const auto& eq : jacobi_system(b.index_set())) {
      const auto v = evaluate(eq, b);
      if (!v.is_zero()) os << "  " << eq.str() << "  evaluates to " << v.str() << "\n";
    }
  }
  if (c.ricci) {
    os << "beta: " << c.ricci->beta.str() << "\n";
    os << "ricci: " << render_derivation(c.ricci->ricci) << "\n";
    os << "derivation: " << render_derivation(c.ricci->derivation) << "\n";
  }
  for (const auto& p : c.problems) os << "problem: " << p << "\n";
  os << "certificate: " << (c.valid ? "valid" : "invalid") << "\n";
  return os.str();
}

}  // namespace nilsol
