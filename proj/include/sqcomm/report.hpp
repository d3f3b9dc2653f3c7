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

// Text Cayley-table dumps and the structured analysis document.
//
// Dump format:
//   cayley v1 <order>
//   <label_0> <label_1> ...
//   <order> rows of <order> space-separated indices (row x, column y = x*y)
//   generators: <label> ...            (optional)

#ifndef SQCOMM_REPORT_HPP_
#define SQCOMM_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqcomm/error.hpp"
#include "sqcomm/group.hpp"
#include "sqcomm/sqcomm.hpp"

namespace sqcomm {

inline void write_cayley(std::ostream& out, const CayleyGroup& g) {
  const std::size_t n = g.order();
  out << "cayley v1 " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << g.labels()[i];
  out << '\n';
  const auto t = g.table();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << t[x * n + y];
    out << '\n';
  }
  if (!g.generators().empty()) {
    out << "generators:";
    for (ElementId x : g.generators()) out << ' ' << g.label(x);
    out << '\n';
  }
}

inline std::string cayley_to_string(const CayleyGroup& g) {
  std::ostringstream s;
  write_cayley(s, g);
  return s.str();
}

inline CayleyGroup read_cayley(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  const auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  const auto fail = [&](const std::string& what) -> FormatError {
    return FormatError("cayley dump line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw fail("empty input");
  std::istringstream header(line);
  std::string magic, version;
  long long order = -1;
  if (!(header >> magic >> version >> order) || magic != "cayley" || version != "v1" ||
      order < 1)
    throw fail("expected 'cayley v1 <order>'");
  const auto n = static_cast<std::size_t>(order);

  if (!next_line()) throw fail("missing labels line");
  std::vector<std::string> labels;
  {
    std::istringstream s(line);
    for (std::string l; s >> l;) labels.push_back(l);
  }
  if (labels.size() != n) throw fail("expected " + std::to_string(n) + " labels");

  std::vector<std::uint32_t> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!next_line()) throw fail("missing table row " + std::to_string(x));
    std::istringstream s(line);
    std::size_t count = 0;
    for (long long v; s >> v; ++count) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw fail("entry out of range");
      table.push_back(static_cast<std::uint32_t>(v));
    }
    if (!s.eof()) throw fail("non-numeric table entry");
    if (count != n) throw fail("expected " + std::to_string(n) + " entries");
  }

  std::vector<std::string> gen_labels;
  if (next_line()) {
    constexpr std::string_view kPrefix = "generators:";
    if (line.rfind(kPrefix, 0) != 0) throw fail("unexpected trailing content");
    std::istringstream s(line.substr(kPrefix.size()));
    for (std::string l; s >> l;) gen_labels.push_back(l);
    if (next_line()) throw fail("unexpected trailing content");
  }

  std::vector<ElementId> gens;
  for (const auto& l : gen_labels) {
    std::size_t i = 0;
    while (i < n && labels[i] != l) ++i;
    if (i == n) throw fail("unknown generator label '" + l + "'");
    gens.emplace_back(static_cast<std::uint32_t>(i));
  }
  return build_group(n, std::move(table), std::move(labels), gens);
}

inline CayleyGroup cayley_from_string(const std::string& text) {
  std::istringstream s(text);
  return read_cayley(s);
}

// ---------------------------------------------------------------------------
// Report document

struct ReportCriterion {
  std::string name;
  bool holds = false;
  std::optional<std::vector<std::string>> witness;

  bool operator==(const ReportCriterion&) const = default;
};

struct ReportDocument {
  std::string schema_version = "1";
  std::string subject;
  std::size_t order = 0;
  bool is_square_commutative = false;
  std::optional<std::vector<std::string>> witness;
  std::size_t center_size = 0;
  std::size_t z2_size = 0;
  std::size_t hat_order = 0;
  bool hat_abelian = false;
  bool squares_central = false;
  bool g_mod_z_abelian = false;
  std::optional<std::vector<ReportCriterion>> criteria;
  std::optional<bool> coverage_ok;
  bool consistent = false;
  std::optional<std::vector<std::pair<std::string, double>>> timings;  // ms per phase

  bool operator==(const ReportDocument&) const = default;
};

inline ReportDocument make_report(std::string subject, const CayleyGroup& g,
                                  const AnalysisReport& r) {
  ReportDocument d;
  d.subject = std::move(subject);
  d.order = r.order;
  d.is_square_commutative = r.is_square_commutative;
  if (r.witness) d.witness = std::vector{g.label(r.witness->first), g.label(r.witness->second)};
  d.center_size = r.center_size;
  d.z2_size = r.z2_size;
  d.hat_order = r.hat_order;
  d.hat_abelian = r.hat_abelian;
  d.squares_central = r.squares_central;
  d.g_mod_z_abelian = r.g_mod_z_abelian;
  if (r.criteria) {
    d.criteria.emplace();
    for (const RelationCheck& c : r.criteria->relations) {
      ReportCriterion rc{c.name, c.holds, std::nullopt};
      if (c.witness) rc.witness = labels_of(g, *c.witness);
      d.criteria->push_back(std::move(rc));
    }
  }
  d.coverage_ok = r.coverage_ok;
  d.consistent = r.consistent;
  return d;
}

namespace detail {

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportDocument& d) {
  using detail::Json;
  Json j;
  j["schema_version"] = d.schema_version;
  j["subject"] = d.subject;
  j["order"] = d.order;
  j["is_square_commutative"] = d.is_square_commutative;
  j["witness"] = detail::optional_json(d.witness);
  j["center_size"] = d.center_size;
  j["z2_size"] = d.z2_size;
  j["hat_order"] = d.hat_order;
  j["hat_abelian"] = d.hat_abelian;
  j["squares_central"] = d.squares_central;
  j["g_mod_z_abelian"] = d.g_mod_z_abelian;
  if (d.criteria) {
    Json arr = Json::array();
    for (const auto& c : *d.criteria)
      arr.push_back(Json{{"name", c.name}, {"holds", c.holds},
                         {"witness", detail::optional_json(c.witness)}});
    j["criteria"] = std::move(arr);
  } else {
    j["criteria"] = nullptr;
  }
  j["coverage_ok"] = detail::optional_json(d.coverage_ok);
  j["consistent"] = d.consistent;
  if (d.timings) {
    Json t = Json::object();
    for (const auto& [phase, ms] : *d.timings) t[phase] = ms;
    j["timings"] = std::move(t);
  }
  return j;
}

inline ReportDocument report_from_json(const nlohmann::ordered_json& j) {
  try {
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<std::string>();
    if (d.schema_version != "1")
      throw FormatError("unsupported schema_version '" + d.schema_version + "'");
    d.subject = j.at("subject").get<std::string>();
    d.order = j.at("order").get<std::size_t>();
    d.is_square_commutative = j.at("is_square_commutative").get<bool>();
    d.witness = detail::optional_from<std::vector<std::string>>(j, "witness");
    d.center_size = j.at("center_size").get<std::size_t>();
    d.z2_size = j.at("z2_size").get<std::size_t>();
    d.hat_order = j.at("hat_order").get<std::size_t>();
    d.hat_abelian = j.at("hat_abelian").get<bool>();
    d.squares_central = j.at("squares_central").get<bool>();
    d.g_mod_z_abelian = j.at("g_mod_z_abelian").get<bool>();
    if (!j.at("criteria").is_null()) {
      d.criteria.emplace();
      for (const auto& c : j.at("criteria"))
        d.criteria->push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                               detail::optional_from<std::vector<std::string>>(c, "witness")});
    }
    d.coverage_ok = detail::optional_from<bool>(j, "coverage_ok");
    d.consistent = j.at("consistent").get<bool>();
    if (j.contains("timings")) {
      d.timings.emplace();
      for (const auto& [phase, ms] : j.at("timings").items())
        d.timings->emplace_back(phase, ms.get<double>());
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("report document: ") + e.what());
  }
}

inline std::string report_to_string(const ReportDocument& d) { return to_json(d).dump(2); }

inline ReportDocument report_from_string(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("report document: ") + e.what());
  }
}

}  // namespace sqcomm

#endif  // SQCOMM_REPORT_HPP_
