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
#include "nilsol/compare.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "nilsol/notation.hpp"

namespace nilsol {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(trim(part));
  return out;
}

std::vector<std::pair<int, std::string>> data_lines(const std::filesystem::path& path, std::string& title, int& n) {
  std::ifstream in(path);
  if (!in) throw FixtureError("missing reference table " + path.filename().string() + " (" + path.string() + ")");
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("n =", 0) == 0) {
        n = std::stoi(body.substr(3));
      } else if (title.empty()) {
        title = body;
      }
      continue;
    }
    out.emplace_back(no, t);
  }
  return out;
}

}  // namespace

FixtureTable load_fixture_table(const std::filesystem::path& path) {
  FixtureTable t;
  t.file = path.filename().string();
  const auto lines = data_lines(path, t.title, t.n);
  if (t.n == 0) throw FixtureError(t.file + ": missing '# n = N' header");
  for (const auto& [no, text] : lines) {
    const auto cols = split(text, '|');
    if (cols.size() != 4) throw FixtureError(t.file + ":" + std::to_string(no) + ": expected 4 columns");
    FixtureRow r;
    r.line = no;
    try {
      r.row = std::stoi(cols[0]);
      r.nullity = static_cast<std::size_t>(std::stoul(cols[3]));
      r.table = parse_vector_notation(cols[1], NotationOptions{t.n, false});
    } catch (const ParseError& e) {
      throw FixtureError(t.file + ":" + std::to_string(no) + ": " + e.what());
    } catch (const std::exception& e) {
      throw FixtureError(t.file + ":" + std::to_string(no) + ": " + e.what());
    }
    r.brackets = cols[1];
    r.index = cols[2];
    r.index_set = r.table.index_set();
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::map<std::size_t, std::size_t> load_fixture_counts(const std::filesystem::path& path) {
  std::string title;
  int n = 0;
  std::map<std::size_t, std::size_t> out;
  for (const auto& [no, text] : data_lines(path, title, n)) {
    const auto cols = split(text, '|');
    if (cols.size() != 2)
      throw FixtureError(path.filename().string() + ":" + std::to_string(no) + ": expected 2 columns");
    out[std::stoul(cols[0])] = std::stoul(cols[1]);
  }
  return out;
}

std::size_t Comparison::max_row_diff() const {
  std::size_t m = 0;
  for (const auto& c : candidates) m = std::max(m, c.row_diff);
  return m;
}

namespace {

struct Manifest {
  std::vector<std::string> solitons;
  std::vector<std::string> candidates;
  std::string counts;
  /// Candidate lists cover every nullity (otherwise only listed nullities).
  bool complete_lists = false;
};

Manifest manifest_for(int n) {
  switch (n) {
    case 6: return {{"dim6_solitons.txt"}, {}, "", true};
    case 8: return {{"dim8_solitons.txt"}, {"dim8_candidates.txt"}, "", true};
    case 9:
      return {{"dim9_solitons.txt"},
              {"dim9_candidates_nullity3.txt", "dim9_candidates_nullity6_8.txt"},
              "dim9_counts.txt",
              false};
    default: throw FixtureError("no reference tables for n = " + std::to_string(n));
  }
}

std::string describe(const Report& rep, Mask m) {
  const auto& rec = rep.records.at(static_cast<std::size_t>(m));
  std::string s = "mask " + std::to_string(m) + " {" + rec.index_set.str() + "}";
  if (rec.nullity) s += " nullity " + std::to_string(*rec.nullity);
  s += ": " + to_string(rec.verdict.status);
  if (rec.pruned_by) s += " by " + *rec.pruned_by;
  if (rec.verdict.refutation && !rec.verdict.refutation->steps.empty())
    s += " (" + rec.verdict.refutation->steps.back().text + ")";
  if (rec.verdict.status == Status::Excluded && !rec.verdict.notes.empty()) s += " (" + rec.verdict.notes[0] + ")";
  return s;
}

std::string row_ref(const FixtureTable& t, const FixtureRow& r) { return t.file + " row " + std::to_string(r.row); }

}  // namespace

Comparison compare_with_reference(const Report& rep, const std::filesystem::path& dir) {
  const Manifest man = manifest_for(rep.n);
  if (rep.records.size() != (std::size_t{1} << theta(rep.n).size()))
    throw std::invalid_argument("comparison needs a full report");
  Comparison cmp;
  cmp.n = rep.n;

  // solitons
  std::set<Mask> ref_sol;
  for (const auto& f : man.solitons) {
    const auto t = load_fixture_table(dir / f);
    for (const auto& r : t.rows) {
      const Mask m = r.index_set.mask();
      ref_sol.insert(m);
      const auto check = verify_certificate(r.table);
      std::string line = row_ref(t, r) + ": printed coefficients " + (check.valid ? "verify" : "fail verification");
      if (!check.valid) line += " [" + check.problems.front() + "]";
      line += "; " + describe(rep, m);
      cmp.items.push_back(line);
    }
  }
  std::set<Mask> gen_sol;
  for (const auto* r : rep.with_status(Status::Soliton)) gen_sol.insert(r->index_set.mask());
  std::set_difference(ref_sol.begin(), ref_sol.end(), gen_sol.begin(), gen_sol.end(),
                      std::back_inserter(cmp.solitons_only_reference));
  std::set_difference(gen_sol.begin(), gen_sol.end(), ref_sol.begin(), ref_sol.end(),
                      std::back_inserter(cmp.solitons_only_generated));
  for (auto m : cmp.solitons_only_generated) cmp.items.push_back("soliton not in the reference: " + describe(rep, m));

  // candidates
  std::map<std::size_t, std::set<Mask>> ref_rows;
  std::map<std::size_t, std::vector<std::pair<int, int>>> dups;
  for (const auto& f : man.candidates) {
    const auto t = load_fixture_table(dir / f);
    std::map<Mask, int> first_row;
    for (const auto& r : t.rows) {
      const Mask m = r.index_set.mask();
      auto [it, fresh] = first_row.emplace(m, r.row);
      if (!fresh) {
        dups[r.nullity].emplace_back(it->second, r.row);
        cmp.items.push_back("duplicate: " + row_ref(t, r) + " repeats row " + std::to_string(it->second));
        continue;
      }
      ref_rows[r.nullity].insert(m);
      const auto& rec = rep.records.at(static_cast<std::size_t>(m));
      if (rec.nullity && *rec.nullity != r.nullity)
        cmp.items.push_back(row_ref(t, r) + " lists nullity " + std::to_string(r.nullity) + ", computed " +
                            std::to_string(*rec.nullity));
    }
  }
  std::map<std::size_t, std::size_t> ref_counts;
  if (!man.counts.empty()) ref_counts = load_fixture_counts(dir / man.counts);

  std::map<std::size_t, std::set<Mask>> gen_rows;
  for (const auto* r : rep.with_status(Status::Candidate)) gen_rows[*r->nullity].insert(r->index_set.mask());

  std::set<std::size_t> nullities;
  for (const auto& [k, v] : ref_rows) nullities.insert(k);
  for (const auto& [k, v] : ref_counts) nullities.insert(k);
  for (const auto& [k, v] : gen_rows) nullities.insert(k);
  for (auto k : nullities) {
    NullityComparison nc;
    nc.nullity = k;
    nc.generated = gen_rows[k].size();
    nc.listed = man.complete_lists || ref_rows.count(k) > 0;
    if (ref_counts.count(k)) {
      nc.reference_count = ref_counts[k];
    } else if (nc.listed) {
      nc.reference_count = ref_rows[k].size();
    }
    nc.duplicates = dups[k];
    if (nc.listed) {
      const auto& a = ref_rows[k];
      const auto& b = gen_rows[k];
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(nc.only_reference));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(nc.only_generated));
      nc.row_diff = nc.only_reference.size() + nc.only_generated.size();
      for (auto m : nc.only_reference)
        cmp.items.push_back("nullity " + std::to_string(k) + " reference row not generated: " + describe(rep, m));
      for (auto m : nc.only_generated)
        cmp.items.push_back("nullity " + std::to_string(k) + " candidate not in the reference: " + describe(rep, m));
    } else {
      const std::size_t ref = nc.reference_count.value_or(0);
      nc.row_diff = ref > nc.generated ? ref - nc.generated : nc.generated - ref;
      if (nc.row_diff != 0)
        cmp.items.push_back("nullity " + std::to_string(k) + ": " + std::to_string(nc.generated) +
                            " candidates generated, reference count " + std::to_string(ref));
    }
    cmp.candidates.push_back(std::move(nc));
  }
  return cmp;
}

std::string render_comparison(const Comparison& c) {
  std::ostringstream os;
  os << "comparison for n = " << c.n << "\n";
  os << "nullity  reference  generated  only-ref  only-gen  row-diff\n";
  os << std::left;
  for (const auto& k : c.candidates) {
    os << std::setw(9) << k.nullity << std::setw(11) << (k.reference_count ? std::to_string(*k.reference_count) : "-")
       << std::setw(11) << k.generated << std::setw(10)
       << (k.listed ? std::to_string(k.only_reference.size()) : "-") << std::setw(10)
       << (k.listed ? std::to_string(k.only_generated.size()) : "-") << k.row_diff << "\n";
  }
  os << "solitons only in reference: " << c.solitons_only_reference.size()
     << ", only generated: " << c.solitons_only_generated.size() << "\n";
  os << "max row diff: " << c.max_row_diff() << "\n";
  for (const auto& item : c.items) os << "- " << item << "\n";
  return os.str();
}

}  // namespace nilsol
