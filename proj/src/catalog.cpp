/* Copyright 2026 The QuTiBench Toolkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qutibench/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "qutibench/csv.hpp"
#include "qutibench/error.hpp"

namespace qutibench {

namespace {

constexpr std::string_view kHeader =
    "platform,mode,datatype,peak_tops,mem_bw_gbps,tdp_watts,cost_usd,bits";

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

void append_opt(std::ostringstream& out, const std::optional<double>& v) {
  out << ',';
  if (v.has_value()) out << csv::format_double(*v);
}

}  // namespace

std::optional<int> builtin_datatype_bits(std::string_view name) {
  if (name == "FP32") return 32;
  if (name == "FP16") return 16;
  if (name == "INT8") return 8;
  if (name == "INT4") return 4;
  if (name == "BIN") return 1;
  if (name == "TERN") return 2;
  return std::nullopt;
}

const PlatformEntry* HardwareCatalog::find(std::string_view platform, std::string_view mode,
                                           std::string_view datatype) const {
  for (const PlatformEntry& e : entries) {
    if (e.platform == platform && e.mode == mode && e.datatype.name == datatype) return &e;
  }
  return nullptr;
}

std::vector<const PlatformEntry*> HardwareCatalog::match_platform(
    std::string_view needle) const {
  std::vector<const PlatformEntry*> out;
  const std::string n = lower(needle);
  for (const PlatformEntry& e : entries) {
    if (lower(e.platform).find(n) != std::string::npos) out.push_back(&e);
  }
  return out;
}

HardwareCatalog parse_catalog(std::string_view text) {
  HardwareCatalog catalog;
  std::set<std::tuple<std::string, std::string, std::string>> keys;
  bool header_seen = false;

  const auto lines = csv::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;

    auto fields = csv::split_line(line);
    if (!header_seen) {
      if (fields.empty() || fields[0] != "platform") {
        throw ParseError(lineno, "expected header starting with 'platform'");
      }
      header_seen = true;
      continue;
    }

    if (fields.size() < 7 || fields.size() > 8) {
      throw ParseError(lineno, "expected 7-8 fields, got " + std::to_string(fields.size()));
    }
    fields.resize(8);

    PlatformEntry e;
    e.platform = fields[0];
    e.mode = fields[1];
    e.datatype.name = fields[2];
    if (e.platform.empty()) throw ParseError(lineno, "empty platform name");
    if (e.datatype.name.empty()) throw ParseError(lineno, "empty datatype");

    auto peak = csv::parse_double(fields[3], lineno, "peak_tops");
    if (!peak.has_value() || *peak <= 0.0) {
      throw ParseError(lineno, "peak_tops must be a positive number");
    }
    e.peak_tops = *peak;
    e.mem_bw_gbps = csv::parse_double(fields[4], lineno, "mem_bw_gbps");
    if (e.mem_bw_gbps.has_value() && *e.mem_bw_gbps <= 0.0) {
      throw ParseError(lineno, "mem_bw_gbps must be positive when present");
    }
    e.tdp_watts = csv::parse_double(fields[5], lineno, "tdp_watts");
    e.cost_usd = csv::parse_double(fields[6], lineno, "cost_usd");

    auto bits = csv::parse_int(fields[7], lineno, "bits");
    auto builtin = builtin_datatype_bits(e.datatype.name);
    if (bits.has_value()) {
      if (*bits <= 0) throw ParseError(lineno, "bits must be positive");
      e.datatype.bits = static_cast<int>(*bits);
    } else if (builtin.has_value()) {
      e.datatype.bits = *builtin;
    } else {
      throw ParseError(lineno, "unknown datatype '" + e.datatype.name +
                                   "' requires an explicit bits column");
    }

    if (!keys.emplace(e.platform, e.mode, e.datatype.name).second) {
      throw ParseError(lineno, "duplicate catalog entry for (" + e.platform + ", " + e.mode +
                                   ", " + e.datatype.name + ")");
    }
    catalog.entries.push_back(std::move(e));
  }

  if (!header_seen) throw ParseError(0, "empty catalog: missing header");
  return catalog;
}

std::string serialize_catalog(const HardwareCatalog& catalog) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const PlatformEntry& e : catalog.entries) {
    out << e.platform << ',' << e.mode << ',' << e.datatype.name << ','
        << csv::format_double(e.peak_tops);
    append_opt(out, e.mem_bw_gbps);
    append_opt(out, e.tdp_watts);
    append_opt(out, e.cost_usd);
    out << ',';
    // Bit width is implicit for the well-known datatype names.
    if (builtin_datatype_bits(e.datatype.name) != e.datatype.bits) out << e.datatype.bits;
    out << '\n';
  }
  return out.str();
}

}  // namespace qutibench
