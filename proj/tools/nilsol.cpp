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
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nilsol.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Filters {
  bool no_direct_sum = false;
  bool no_invertible = false;
  bool no_positivity = false;
  bool no_ordered_type = false;
  bool no_jacobi_screen = false;
  bool no_resolve = false;
  bool strict_positivity = false;
  std::string grouping = "per-triple";
  unsigned jobs = 1;

  void add_to(CLI::App* cmd, bool with_jobs) {
    cmd->add_flag("--no-direct-sum-filter", no_direct_sum, "Keep decomposable index sets");
    cmd->add_flag("--no-invertible-filter", no_invertible, "Skip the invertible-case obstruction");
    cmd->add_flag("--no-positivity-filter", no_positivity, "Skip the fixed-coordinate positivity check");
    cmd->add_flag("--no-ordered-type-filter", no_ordered_type, "Skip the derivation eigenvalue check");
    cmd->add_flag("--no-jacobi-screen", no_jacobi_screen, "Skip the linear Jacobi screening");
    cmd->add_flag("--no-resolve", no_resolve, "Report every survivor of the screens as a candidate");
    cmd->add_flag("--strict-positivity", strict_positivity, "Require an interior point of the positivity cone");
    cmd->add_option("--jacobi-grouping", grouping, "Jacobi equations per generating triple or merged by target")
        ->check(CLI::IsMember({"per-triple", "by-target"}))
        ->capture_default_str();
    if (with_jobs)
      cmd->add_option("-j,--jobs", jobs, "Worker threads (default from NILSOL_JOBS)")
          ->check(CLI::Range(1u, 1024u))
          ->capture_default_str();
  }

  nilsol_options options() const {
    nilsol_options o;
    nilsol_options_default(&o);
    o.direct_sum_filter = !no_direct_sum;
    o.invertible_filter = !no_invertible;
    o.positivity_filter = !no_positivity;
    o.ordered_type_filter = !no_ordered_type;
    o.jacobi_screen = !no_jacobi_screen;
    o.resolve = !no_resolve;
    o.strict_positivity = strict_positivity;
    o.grouping = grouping == "by-target" ? NILSOL_GROUPING_BY_TARGET : NILSOL_GROUPING_PER_TRIPLE;
    o.jobs = jobs;
    return o;
  }
};

nilsol_format to_format(const std::string& f) {
  if (f == "json") return NILSOL_FORMAT_JSON;
  if (f == "csv") return NILSOL_FORMAT_CSV;
  return NILSOL_FORMAT_TABLE;
}

/// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { nilsol_string_free(p); }
  const char* str() const { return p ? p : ""; }
};

int report_error(nilsol_status s, const CLI::App* usage = nullptr) {
  std::cerr << "error: " << nilsol_last_error() << "\n";
  switch (s) {
    case NILSOL_E_INVALID_ARGUMENT:
      if (usage) std::cerr << usage->help();
      return kExitUsage;
    case NILSOL_E_PARSE:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void warn_dimension(int n) {
  if (n > nilsol_supported_dimension() && n <= nilsol_max_dimension())
    std::cerr << "warning: n = " << n << " lies beyond the validated range n <= " << nilsol_supported_dimension()
              << "; Jacobi equations come from the general generator\n";
}

bool write_or_print(const char* text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return false;
  }
  os << text;
  os.close();
  if (!os) {
    std::cerr << "error: write to " << out << " failed\n";
    return false;
  }
  return true;
}

/// Default worker count from NILSOL_JOBS; nullopt when set but malformed.
std::optional<unsigned> env_jobs() {
  const char* v = std::getenv("NILSOL_JOBS");
  if (!v || !*v) return 1u;
  unsigned x = 0;
  const auto end = v + std::strlen(v);
  const auto [p, ec] = std::from_chars(v, end, x);
  if (ec != std::errc() || p != end || x < 1 || x > 1024) return std::nullopt;
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classifier for ordered-type nilsoliton metric Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nilsol_version()));

  int n = 0;
  std::string format = "table";
  std::string out;
  std::string path;
  std::string lambda;
  std::string fixtures;
  Filters filters;
  if (auto j = env_jobs()) {
    filters.jobs = *j;
  } else {
    std::cerr << "error: NILSOL_JOBS must be an integer in [1, 1024]\n";
    return kExitUsage;
  }

  auto* theta = app.add_subcommand("theta", "List the admissible triples (i,j,i+j)");
  theta->add_option("--n", n, "Dimension")->required();

  auto* classify = app.add_subcommand("classify", "Classify every index set of dimension n");
  classify->add_option("--n", n, "Dimension")->required();
  classify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  classify->add_option("--out", out, "Output file (default stdout)");
  filters.add_to(classify, true);

  auto* verify = app.add_subcommand("verify", "Check a bracket table (vector notation or JSON)");
  verify->add_option("path", path, "Input file, or - for stdin")->required();

  auto* solve = app.add_subcommand("solve", "Classify a single index set");
  solve->add_option("--lambda", lambda, "Triples \"i,j,k;...\" or a decimal mask")->required();
  solve->add_option("--n", n, "Dimension")->required();
  solve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  filters.add_to(solve, false);

  auto* compare = app.add_subcommand("compare", "Compare a classification with reference tables");
  compare->add_option("--n", n, "Dimension")->required();
  compare->add_option("--fixtures", fixtures, "Directory with the reference tables")->required();
  filters.add_to(compare, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (theta->parsed()) {
    Text t;
    if (auto s = nilsol_theta(n, &t.p, nullptr)) return report_error(s, theta);
    return write_or_print(t.str(), "") ? kExitOk : kExitFailure;
  }

  if (classify->parsed()) {
    warn_dimension(n);
    const auto opts = filters.options();
    nilsol_report* r = nullptr;
    if (auto s = nilsol_classify(n, &opts, &r)) return report_error(s, classify);
    Text t;
    const auto s = nilsol_report_render(r, to_format(format), &t.p);
    nilsol_report_free(r);
    if (s) return report_error(s);
    return write_or_print(t.str(), out) ? kExitOk : kExitFailure;
  }

  if (verify->parsed()) {
    std::stringstream buf;
    if (path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream is(path, std::ios::binary);
      if (!is) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitFailure;
      }
      buf << is.rdbuf();
    }
    int valid = 0;
    Text t;
    if (auto s = nilsol_verify(buf.str().c_str(), &valid, &t.p)) {
      if (s == NILSOL_E_PARSE) {
        std::cerr << "error: " << path << ": " << nilsol_last_error() << "\n";
        return kExitUsage;
      }
      return report_error(s);
    }
    std::fputs(t.str(), stdout);
    return valid ? kExitOk : kExitFailure;
  }

  if (solve->parsed()) {
    warn_dimension(n);
    const auto opts = filters.options();
    Text t;
    if (auto s = nilsol_solve(n, lambda.c_str(), &opts, to_format(format), nullptr, &t.p))
      return report_error(s, solve);
    return write_or_print(t.str(), "") ? kExitOk : kExitFailure;
  }

  if (compare->parsed()) {
    const auto opts = filters.options();
    nilsol_report* r = nullptr;
    if (auto s = nilsol_classify(n, &opts, &r)) return report_error(s, compare);
    Text t;
    const auto s = nilsol_compare(r, fixtures.c_str(), &t.p, nullptr);
    nilsol_report_free(r);
    if (s) return report_error(s);
    return write_or_print(t.str(), "") ? kExitOk : kExitFailure;
  }
  return kExitUsage;
}
