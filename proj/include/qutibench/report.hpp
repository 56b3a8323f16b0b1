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

#ifndef QUTIBENCH_REPORT_HPP_
#define QUTIBENCH_REPORT_HPP_

#include <string>
#include <vector>

#include "qutibench/measurements.hpp"
#include "qutibench/pareto.hpp"
#include "qutibench/roofline.hpp"

namespace qutibench {

enum class ReportFormat { kText, kCsv, kJson };

ReportFormat parse_report_format(std::string_view name);  // throws InvalidInput

// Everything a report can draw from. Sections with no data are rendered
// with an explicit "no data" marker rather than dropped.
struct ReportStore {
  struct ModelPredictions {
    std::string model;
    std::string platform;
    std::string mode;
    std::string datatype;
    std::vector<PredictionRow> rows;
  };
  std::vector<ModelPredictions> predictions;         // Level 0
  std::vector<MeasurementRecord> records;            // Levels 1-3
  std::vector<Objective> objectives;                 // for the Level-3 frontier
};

// Deterministic summary: Level-0 prediction tables, Level-1/2 grouped stats,
// Level-3 pareto frontier. Same store -> byte-identical output.
std::string render_report(const ReportStore& store, ReportFormat format);

// Plot-ready scatter: one row per Level-3 record carrying all objective
// values plus a frontier flag column ("frontier=1" members).
std::string render_scatter_csv(const std::vector<MeasurementRecord>& records,
                               const std::vector<Objective>& objectives);

}  // namespace qutibench

#endif  // QUTIBENCH_REPORT_HPP_
