// Copyright 2026 The sqcomm Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `sqcomm` command line. Kept in a header so tests can drive it
// in-process through run_cli().
//
// Exit codes: 0 square commutative / success, 1 not square commutative or a
// failed verification suite, 2 usage or input error, 3 coset limit reached
// by `enumerate`.

#ifndef SQCOMM_TOOLS_CLI_APP_HPP_
#define SQCOMM_TOOLS_CLI_APP_HPP_

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sqcomm/catalog.hpp"
#include "sqcomm/error.hpp"
#include "sqcomm/presentation.hpp"
#include "sqcomm/report.hpp"
#include "sqcomm/sqcomm.hpp"
#include "sqcomm/todd_coxeter.hpp"
#include "sqcomm/verify.hpp"

namespace sqcomm::cli {

enum ExitCode : int {
  kSquareCommutative = 0,
  kOk = 0,
  kNotSquareCommutative = 1,
  kSuiteFailed = 1,
  kError = 2,
  kCosetLimit = 3,
};

struct Subject {
  CayleyGroup group;
  std::vector<ElementId> generators;
  std::vector<std::string> warnings;
};

// A presentation when the text contains '<' or '|'; a catalog spec otherwise.
inline Subject resolve_subject(const std::string& spec, const std::string& rel,
                               std::size_t max_cosets) {
  if (looks_like_presentation(spec)) {
    if (!rel.empty()) throw BadParameter("--rel only applies to the bs catalog family");
    Realization r = todd_coxeter(spec, max_cosets);
    return Subject{r.group, r.assignment, {}};
  }
  CatalogEntry e = from_spec(spec, rel, max_cosets);
  return Subject{e.group, e.canonical_generators, e.warnings};
}

// Labels separated by spaces and/or commas.
inline std::vector<ElementId> resolve_labels(const CayleyGroup& g, const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream s(spaced);
  std::vector<ElementId> out;
  for (std::string label; s >> label;) {
    auto id = g.find(label);
    if (!id) throw BadParameter("--gens: no element labelled '" + label + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw BadParameter("--gens: empty generator list");
  return out;
}

inline std::vector<ElementId> dedupe(std::vector<ElementId> xs) {
  std::vector<ElementId> out;
  for (ElementId x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_report(std::ostream& out, const ReportDocument& d,
                         const std::vector<std::string>& generator_labels) {
  out << "subject: " << d.subject << '\n';
  out << "order: " << d.order << '\n';
  out << "square commutative: " << yes_no(d.is_square_commutative) << '\n';
  if (d.witness)
    out << "witness: (" << (*d.witness)[0] << ", " << (*d.witness)[1] << ")\n";
  out << "center size: " << d.center_size << '\n';
  out << "Z2 size: " << d.z2_size << '\n';
  out << "G/Z2 order: " << d.hat_order << " (" << (d.hat_abelian ? "abelian" : "non-abelian")
      << ")\n";
  out << "squares central: " << yes_no(d.squares_central) << '\n';
  out << "G/Z abelian: " << yes_no(d.g_mod_z_abelian) << '\n';
  out << "generators:";
  for (const auto& l : generator_labels) out << ' ' << l;
  out << '\n';
  if (d.criteria) {
    out << "criteria:\n";
    for (const ReportCriterion& c : *d.criteria) {
      out << "  " << std::left << std::setw(30) << c.name << (c.holds ? "holds" : "fails");
      if (c.witness) {
        out << " at (";
        for (std::size_t i = 0; i < c.witness->size(); ++i)
          out << (i ? ", " : "") << (*c.witness)[i];
        out << ')';
      }
      out << '\n';
    }
  }
  if (d.coverage_ok) out << "coverage G = C_n Z(G): " << yes_no(*d.coverage_ok) << '\n';
  out << "consistent: " << yes_no(d.consistent) << '\n';
  if (d.timings)
    for (const auto& [phase, ms] : *d.timings)
      out << "time " << phase << ": " << std::fixed << std::setprecision(3) << ms << " ms\n";
}

struct CheckOptions {
  std::string spec;
  bool json = false;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::string gens;
  std::string rel;
  bool timings = false;
};

inline int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  const auto ms_since = [](Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
  };
  auto t0 = Clock::now();
  Subject s = resolve_subject(o.spec, o.rel, o.max_cosets);
  const double build_ms = ms_since(t0);
  for (const auto& w : s.warnings) err << "warning: " << w << '\n';

  std::vector<ElementId> gens =
      o.gens.empty() ? dedupe(s.generators) : resolve_labels(s.group, o.gens);
  t0 = Clock::now();
  const AnalysisReport r = analyze(s.group, gens);
  const double analyze_ms = ms_since(t0);

  ReportDocument d = make_report(o.spec, s.group, r);
  if (o.timings) d.timings = {{{"build", build_ms}, {"analyze", analyze_ms}}};
  if (o.json) {
    out << report_to_string(d) << '\n';
  } else {
    print_report(out, d, labels_of(s.group, r.generators));
  }
  return r.is_square_commutative ? kSquareCommutative : kNotSquareCommutative;
}

struct EnumerateOptions {
  std::string presentation;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::string dump;
};

inline int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  Realization r;
  try {
    r = todd_coxeter(o.presentation, o.max_cosets);
  } catch (const CosetLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCosetLimit;
  }
  out << "order: " << r.group.order() << '\n';
  if (!o.dump.empty()) {
    std::ofstream f(o.dump);
    if (!f) throw Error("cannot write '" + o.dump + "'");
    write_cayley(f, r.group);
    if (!f) throw Error("write to '" + o.dump + "' failed");
  }
  return kOk;
}

struct CatalogOptions {
  std::vector<std::string> specs;
  std::string n_range;
  std::optional<long long> under;
  std::string rel;
  std::size_t max_cosets = kDefaultMaxCosets;
};

inline std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long long v = detail::parse_int(text, "--n");
    return {v, v};
  }
  const long long lo = detail::parse_int(std::string_view(text).substr(0, dots), "--n");
  const long long hi = detail::parse_int(std::string_view(text).substr(dots + 2), "--n");
  if (lo > hi) throw BadParameter("--n range " + text + " is empty");
  return {lo, hi};
}

inline constexpr long long kMaxUnder = 12;

inline std::vector<CatalogEntry> catalog_entries(const CatalogOptions& o) {
  std::vector<CatalogEntry> out;
  if (o.under) {
    if (*o.under < 1 || *o.under > kMaxUnder)
      throw BadParameter("--under needs 1 <= N <= " + std::to_string(kMaxUnder));
    for (CatalogEntry& e : small_groups_under_12())
      if (static_cast<long long>(e.group.order()) < *o.under) out.push_back(std::move(e));
  }
  for (const std::string& spec : o.specs) {
    if (o.n_range.empty() || spec.find(':') != std::string::npos) {
      out.push_back(from_spec(spec, o.rel, o.max_cosets));
      continue;
    }
    const auto [lo, hi] = parse_range(o.n_range);
    for (long long n = lo; n <= hi; ++n)
      out.push_back(from_spec(spec + ":" + std::to_string(n), o.rel, o.max_cosets));
  }
  if (out.empty()) throw BadParameter("nothing to list: give a family, a spec or --under");
  return out;
}

inline int cmd_catalog(const CatalogOptions& o, std::ostream& out, std::ostream& err) {
  const std::vector<CatalogEntry> entries = catalog_entries(o);
  std::size_t width = 4;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "name" << std::right
      << std::setw(6) << "order" << std::setw(6) << "|Z|" << std::setw(6) << "|Z2|"
      << "  verdict\n";
  for (const auto& e : entries) {
    for (const auto& w : e.warnings) err << "warning: " << e.name << ": " << w << '\n';
    out << std::left << std::setw(static_cast<int>(width) + 2) << e.name << std::right
        << std::setw(6) << e.group.order() << std::setw(6) << center(e.group).size()
        << std::setw(6) << z2_subgroup(e.group).size() << "  "
        << (is_square_commutative(e.group) ? "square-commutative" : "not-square-commutative")
        << '\n';
  }
  return kOk;
}

inline int cmd_verify_paper(std::ostream& out) {
  const std::vector<CatalogEntry> corpus = verification_corpus();
  const std::vector<SuiteResult> results = run_all_suites(corpus);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t passed = 0;
  const SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
        << r.name << std::right << std::setw(6) << r.cases << " cases\n";
    if (r.passed) {
      ++passed;
    } else if (!first_failure) {
      first_failure = &r;
    }
  }
  out << passed << "/" << results.size() << " suites passed over " << corpus.size()
      << " corpus groups\n";
  if (first_failure) {
    out << "first failure: " << first_failure->name << ": " << first_failure->failure << '\n';
    return kSuiteFailed;
  }
  return kOk;
}

// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square commutative group toolkit", "sqcomm"};
  app.require_subcommand(1);

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Analyze a presentation or catalog spec");
  check_cmd->add_option("spec", check.spec, "Presentation text or catalog spec")->required();
  check_cmd->add_flag("--json", check.json, "Emit the structured report");
  check_cmd->add_option("--max-cosets", check.max_cosets, "Coset enumeration limit");
  check_cmd->add_option("--gens", check.gens, "Generator labels for criteria and coverage");
  check_cmd->add_option("--rel", check.rel, "Extra relations for the bs family");
  check_cmd->add_flag("--timings", check.timings, "Report per-phase timings");

  EnumerateOptions enumerate;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Enumerate a finite presentation");
  enum_cmd->add_option("presentation", enumerate.presentation, "Presentation text")->required();
  enum_cmd->add_option("--max-cosets", enumerate.max_cosets, "Coset enumeration limit");
  enum_cmd->add_option("--dump", enumerate.dump, "Write the Cayley table to this file");

  CatalogOptions catalog;
  std::optional<long long> under;
  CLI::App* cat_cmd = app.add_subcommand("catalog", "List catalog groups with verdicts");
  cat_cmd->add_option("specs", catalog.specs, "Families or specs (e.g. dihedral, q8, cyclic:5)");
  cat_cmd->add_option("--n", catalog.n_range, "Parameter range a..b for bare families");
  cat_cmd->add_option("--under", under, "All groups of order below N (N <= 12)");
  cat_cmd->add_option("--rel", catalog.rel, "Extra relations for the bs family");
  cat_cmd->add_option("--max-cosets", catalog.max_cosets, "Coset enumeration limit");

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "Run every verification suite over the corpus");

  std::vector<const char*> argv{"sqcomm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, out, err);
    if (enum_cmd->parsed()) return cmd_enumerate(enumerate, out, err);
    if (cat_cmd->parsed()) {
      catalog.under = under;
      return cmd_catalog(catalog, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify_paper(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace sqcomm::cli

#endif  // SQCOMM_TOOLS_CLI_APP_HPP_
