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

#include "qutibench/pareto.hpp"

#include <algorithm>
#include <set>

#include "qutibench/error.hpp"

namespace qutibench {

namespace {

double adjusted(const MeasurementRecord& r, const Objective& o) {
  auto v = objective_value(r, o.field);
  if (!v.has_value()) {
    throw InvalidInput("record " + r.source_file + ":" + std::to_string(r.source_line) +
                       " lacks objective field '" + o.field + "'");
  }
  return o.direction == Direction::kMaximize ? *v : -*v;
}

void check_objectives(const std::vector<Objective>& objectives) {
  if (objectives.size() < 2) throw InvalidInput("need at least two objectives");
  std::set<std::string> fields;
  for (const Objective& o : objectives) {
    if (!fields.insert(o.field).second) {
      throw InvalidInput("duplicate objective field '" + o.field + "'");
    }
  }
}

}  // namespace

std::optional<double> objective_value(const MeasurementRecord& r, std::string_view field) {
  if (field == "latency_ms") return r.latency_ms;
  if (field == "throughput_gops") return r.throughput_gops;
  if (field == "power_watts") return r.power_watts;
  if (field == "top1_pct") return r.top1_pct;
  if (field == "top5_pct") return r.top5_pct;
  if (field == "reported_efficiency") return r.reported_efficiency;
  if (field == "parallelism_n") return static_cast<double>(r.parallelism_n);
  if (field == "level") return static_cast<double>(r.level);
  throw InvalidInput("unknown objective field '" + std::string(field) + "'");
}

bool dominates(const MeasurementRecord& a, const MeasurementRecord& b,
               const std::vector<Objective>& objectives) {
  check_objectives(objectives);
  bool strictly_better = false;
  for (const Objective& o : objectives) {
    const double va = adjusted(a, o);
    const double vb = adjusted(b, o);
    if (va < vb) return false;
    if (va > vb) strictly_better = true;
  }
  return strictly_better;
}

ParetoResult pareto_frontier(const std::vector<MeasurementRecord>& records,
                             const std::vector<Objective>& objectives) {
  check_objectives(objectives);
  if (records.empty()) throw InvalidInput("cannot compute a frontier of zero records");

  ParetoResult result;
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < records.size(); ++i) {
    bool ok = true;
    for (const Objective& o : objectives) {
      if (!objective_value(records[i], o.field).has_value()) {
        result.warnings.push_back(Finding{
            Severity::kWarn, "missing-objective",
            records[i].source_file + ":" + std::to_string(records[i].source_line),
            "record lacks objective field '" + o.field + "'; excluded from frontier query"});
        ok = false;
        break;
      }
    }
    if (ok) eligible.push_back(i);
  }

  for (std::size_t i : eligible) {
    bool dominated = false;
    for (std::size_t j : eligible) {
      if (i != j && dominates(records[j], records[i], objectives)) {
        dominated = true;
        break;
      }
    }
    if (dominated) {
      ++result.dominated_count;
    } else {
      result.frontier.push_back(i);
    }
  }

  std::stable_sort(result.frontier.begin(), result.frontier.end(),
                   [&](std::size_t a, std::size_t b) {
                     return adjusted(records[a], objectives.front()) >
                            adjusted(records[b], objectives.front());
                   });
  return result;
}

}  // namespace qutibench
