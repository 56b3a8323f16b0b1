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

#ifndef QUTIBENCH_CATALOG_HPP_
#define QUTIBENCH_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qutibench {

// Numeric datatype of a platform entry. Well-known names (FP32, FP16, INT8,
// INT4, BIN, TERN) carry implied bit widths; anything else must state its
// width explicitly in the catalog's optional `bits` column.
struct DatatypeSpec {
  std::string name;
  int bits = 0;

  double bytes() const { return bits / 8.0; }
  bool operator==(const DatatypeSpec&) const = default;
};

// Resolves a datatype name to its bit width; returns nullopt for names that
// are not built in.
std::optional<int> builtin_datatype_bits(std::string_view name);

// One (platform, operating mode, datatype) row of the hardware catalog.
struct PlatformEntry {
  std::string platform;
  std::string mode;
  DatatypeSpec datatype;
  double peak_tops = 0.0;                 // peak compute, TOP/s
  std::optional<double> mem_bw_gbps;      // external memory bandwidth, GB/s
  std::optional<double> tdp_watts;
  std::optional<double> cost_usd;
};

struct HardwareCatalog {
  std::vector<PlatformEntry> entries;

  // Exact match on all three keys; nullptr when absent.
  const PlatformEntry* find(std::string_view platform, std::string_view mode,
                            std::string_view datatype) const;

  // All entries whose platform name contains `needle` case-insensitively.
  std::vector<const PlatformEntry*> match_platform(std::string_view needle) const;
};

// Parses the catalog CSV:
//   platform,mode,datatype,peak_tops,mem_bw_gbps,tdp_watts,cost_usd[,bits]
// Empty optional fields are allowed. Throws ParseError on malformed rows,
// duplicate (platform, mode, datatype) keys, non-positive peak performance,
// or unknown datatypes without an explicit bit width.
HardwareCatalog parse_catalog(std::string_view text);

std::string serialize_catalog(const HardwareCatalog& catalog);

}  // namespace qutibench

#endif  // QUTIBENCH_CATALOG_HPP_
