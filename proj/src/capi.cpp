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
#include "nilsol.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "nilsol/compare.hpp"
#include "nilsol/notation.hpp"
#include "nilsol/serialize.hpp"

struct nilsol_report {
  nilsol::Report report;
};

namespace {

struct ErrorState {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local ErrorState last_error;

constexpr int kSupportedDimension = 9;
constexpr int kMaxDimension = 10;

nilsol_status fail(nilsol_status s, const std::string& msg, int line = 0, int column = 0) {
  last_error = {msg, line, column};
  return s;
}

void clear_error() { last_error = {}; }

/// Maps exceptions escaping the core onto status codes.
template <class F>
nilsol_status guarded(F&& f) {
  clear_error();
  try {
    return f();
  } catch (const nilsol::ParseError& e) {
    return fail(NILSOL_E_PARSE, e.what(), e.line(), e.column());
  } catch (const nilsol::FixtureError& e) {
    return fail(NILSOL_E_FIXTURE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NILSOL_E_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(NILSOL_E_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NILSOL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NILSOL_E_INTERNAL, e.what());
  } catch (...) {
    return fail(NILSOL_E_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

nilsol::Config to_config(const nilsol_options* o) {
  nilsol::Config c;
  if (!o) return c;
  c.direct_sum_filter = o->direct_sum_filter != 0;
  c.invertible_filter = o->invertible_filter != 0;
  c.positivity_filter = o->positivity_filter != 0;
  c.ordered_type_filter = o->ordered_type_filter != 0;
  c.jacobi_screen = o->jacobi_screen != 0;
  c.strict_positivity = o->strict_positivity != 0;
  c.resolve = o->resolve != 0;
  c.grouping = o->grouping == NILSOL_GROUPING_BY_TARGET ? nilsol::JacobiGrouping::ByTarget
                                                        : nilsol::JacobiGrouping::PerTriple;
  c.jobs = o->jobs == 0 ? 1 : o->jobs;
  return c;
}

bool to_format(nilsol_format f, nilsol::Format& out) {
  switch (f) {
    case NILSOL_FORMAT_TABLE: out = nilsol::Format::Table; return true;
    case NILSOL_FORMAT_JSON: out = nilsol::Format::Json; return true;
    case NILSOL_FORMAT_CSV: out = nilsol::Format::Csv; return true;
  }
  return false;
}

nilsol_verdict to_verdict(nilsol::Status s) {
  switch (s) {
    case nilsol::Status::Soliton: return NILSOL_VERDICT_SOLITON;
    case nilsol::Status::NonSoliton: return NILSOL_VERDICT_NONSOLITON;
    case nilsol::Status::Candidate: return NILSOL_VERDICT_CANDIDATE;
    case nilsol::Status::Excluded: break;
  }
  return NILSOL_VERDICT_EXCLUDED;
}

nilsol_status check_dimension(int n) {
  if (n < 3 || n > kMaxDimension)
    return fail(NILSOL_E_INVALID_ARGUMENT,
                "n must lie in [3, " + std::to_string(kMaxDimension) + "], got " + std::to_string(n));
  return NILSOL_OK;
}

}  // namespace

extern "C" {

const char* nilsol_version(void) { return "1.0.0"; }

const char* nilsol_last_error(void) { return last_error.message.c_str(); }
int nilsol_last_error_line(void) { return last_error.line; }
int nilsol_last_error_column(void) { return last_error.column; }

void nilsol_string_free(char* s) { std::free(s); }

void nilsol_options_default(nilsol_options* o) {
  if (!o) return;
  const nilsol::Config c;
  o->direct_sum_filter = c.direct_sum_filter;
  o->invertible_filter = c.invertible_filter;
  o->positivity_filter = c.positivity_filter;
  o->ordered_type_filter = c.ordered_type_filter;
  o->jacobi_screen = c.jacobi_screen;
  o->strict_positivity = c.strict_positivity;
  o->resolve = c.resolve;
  o->grouping = NILSOL_GROUPING_PER_TRIPLE;
  o->jobs = c.jobs;
}

int nilsol_max_dimension(void) { return kMaxDimension; }
int nilsol_supported_dimension(void) { return kSupportedDimension; }

nilsol_status nilsol_theta(int n, char** out_text, size_t* out_count) {
  return guarded([&] {
    if (!out_text) return fail(NILSOL_E_INVALID_ARGUMENT, "null output pointer");
    if (n < 1 || n > nilsol::kMaxDimension)
      return fail(NILSOL_E_INVALID_ARGUMENT, "n must lie in [1, " + std::to_string(nilsol::kMaxDimension) + "], got " +
                                                 std::to_string(n));
    const auto t = nilsol::theta(n);
    std::string s;
    for (const auto& x : t) s += nilsol::to_string(x) + "\n";
    *out_text = dup(s);
    if (out_count) *out_count = t.size();
    return NILSOL_OK;
  });
}

nilsol_status nilsol_classify(int n, const nilsol_options* opts, nilsol_report** out) {
  return guarded([&] {
    if (!out) return fail(NILSOL_E_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    if (auto s = check_dimension(n)) return s;
    auto r = std::make_unique<nilsol_report>();
    r->report = nilsol::run(n, to_config(opts));
    *out = r.release();
    return NILSOL_OK;
  });
}

void nilsol_report_free(nilsol_report* r) { delete r; }

int nilsol_report_n(const nilsol_report* r) { return r ? r->report.n : 0; }

size_t nilsol_report_record_count(const nilsol_report* r) { return r ? r->report.records.size() : 0; }

size_t nilsol_report_excluded(const nilsol_report* r) { return r ? r->report.excluded() : 0; }

int nilsol_report_max_nullity(const nilsol_report* r) {
  if (!r) return -1;
  const auto c = r->report.counts();
  return c.empty() ? -1 : static_cast<int>(c.rbegin()->first);
}

nilsol_status nilsol_report_counts(const nilsol_report* r, size_t nullity, nilsol_counts* out) {
  return guarded([&] {
    if (!r || !out) return fail(NILSOL_E_INVALID_ARGUMENT, "null argument");
    *out = {0, 0, 0};
    const auto c = r->report.counts();
    if (auto it = c.find(nullity); it != c.end())
      *out = {it->second.solitons, it->second.candidates, it->second.nonsolitons};
    return NILSOL_OK;
  });
}

nilsol_status nilsol_report_record(const nilsol_report* r, size_t index, uint64_t* mask, nilsol_verdict* verdict,
                                   int* nullity) {
  return guarded([&] {
    if (!r) return fail(NILSOL_E_INVALID_ARGUMENT, "null report");
    if (index >= r->report.records.size()) return fail(NILSOL_E_INVALID_ARGUMENT, "record index out of range");
    const auto& rec = r->report.records[index];
    if (mask) *mask = rec.index_set.mask();
    if (verdict) *verdict = to_verdict(rec.verdict.status);
    if (nullity) *nullity = rec.nullity ? static_cast<int>(*rec.nullity) : -1;
    return NILSOL_OK;
  });
}

nilsol_status nilsol_report_render(const nilsol_report* r, nilsol_format f, char** out_text) {
  return guarded([&] {
    nilsol::Format fmt;
    if (!r || !out_text) return fail(NILSOL_E_INVALID_ARGUMENT, "null argument");
    if (!to_format(f, fmt)) return fail(NILSOL_E_INVALID_ARGUMENT, "unknown format");
    *out_text = dup(nilsol::render_report(r->report, fmt));
    return NILSOL_OK;
  });
}

nilsol_status nilsol_report_write(const nilsol_report* r, nilsol_format f, const char* path) {
  return guarded([&] {
    nilsol::Format fmt;
    if (!r || !path) return fail(NILSOL_E_INVALID_ARGUMENT, "null argument");
    if (!to_format(f, fmt)) return fail(NILSOL_E_INVALID_ARGUMENT, "unknown format");
    const auto text = nilsol::render_report(r->report, fmt);
    std::ofstream os(path, std::ios::binary);
    if (!os) return fail(NILSOL_E_IO, std::string("cannot open ") + path + " for writing");
    os << text;
    os.close();
    if (!os) return fail(NILSOL_E_IO, std::string("write to ") + path + " failed");
    return NILSOL_OK;
  });
}

nilsol_status nilsol_verify(const char* text, int* valid, char** out_summary) {
  return guarded([&] {
    if (!text) return fail(NILSOL_E_INVALID_ARGUMENT, "null text");
    const auto b = nilsol::parse_bracket_file(text);
    const auto check = nilsol::verify_certificate(b);
    if (valid) *valid = check.valid ? 1 : 0;
    if (out_summary) *out_summary = dup(nilsol::render_certificate_check(b, check));
    return NILSOL_OK;
  });
}

nilsol_status nilsol_solve(int n, const char* lambda, const nilsol_options* opts, nilsol_format f,
                           nilsol_verdict* verdict, char** out_text) {
  return guarded([&] {
    nilsol::Format fmt;
    if (!lambda) return fail(NILSOL_E_INVALID_ARGUMENT, "null index set");
    if (!to_format(f, fmt)) return fail(NILSOL_E_INVALID_ARGUMENT, "unknown format");
    if (auto s = check_dimension(n)) return s;
    const auto s = nilsol::IndexSet::parse(lambda, n);
    const auto rec = nilsol::classify(s, to_config(opts));
    if (verdict) *verdict = to_verdict(rec.verdict.status);
    if (out_text) *out_text = dup(nilsol::render_record(rec, fmt));
    return NILSOL_OK;
  });
}

nilsol_status nilsol_compare(const nilsol_report* r, const char* fixtures_dir, char** out_text,
                             size_t* max_row_diff) {
  return guarded([&] {
    if (!r || !fixtures_dir) return fail(NILSOL_E_INVALID_ARGUMENT, "null argument");
    const auto c = nilsol::compare_with_reference(r->report, fixtures_dir);
    if (out_text) *out_text = dup(nilsol::render_comparison(c));
    if (max_row_diff) *max_row_diff = c.max_row_diff();
    return NILSOL_OK;
  });
}

}  // extern "C"
