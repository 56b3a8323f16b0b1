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

#ifndef QUTIBENCH_PARETO_HPP_
#define QUTIBENCH_PARETO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qutibench/measurements.hpp"

namespace qutibench {

enum class Direction { kMaximize, kMinimize };

struct Objective {
  std::string field;  // numeric MeasurementRecord field name
  Direction direction = Direction::kMaximize;
};

// Reads the named numeric field off a record; nullopt when the record does
// not carry it. Known fields: latency_ms, throughput_gops, power_watts,
// top1_pct, top5_pct, reported_efficiency, parallelism_n, level.
std::optional<double> objective_value(const MeasurementRecord& r, std::string_view field);

// True iff a is at least as good as b in every objective (direction-adjusted)
// and strictly better in at least one. Throws InvalidInput when either record
// lacks an objective field.
bool dominates(const MeasurementRecord& a, const MeasurementRecord& b,
               const std::vector<Objective>& objectives);

struct ParetoResult {
  // Indices into the input record list, sorted by the first objective,
  // best first. Ties on all objectives are all kept.
  std::vector<std::size_t> frontier;
  std::size_t dominated_count = 0;
  // Records skipped because they lack an objective field.
  std::vector<Finding> warnings;
};

// Exact non-dominated subset. Requires at least two objectives with distinct
// fields; records missing an objective field are excluded with a warn
// finding rather than treated as worst-case.
ParetoResult pareto_frontier(const std::vector<MeasurementRecord>& records,
                             const std::vector<Objective>& objectives);

}  // namespace qutibench

#endif  // QUTIBENCH_PARETO_HPP_
