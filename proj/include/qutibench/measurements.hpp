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

#ifndef QUTIBENCH_MEASUREMENTS_HPP_
#define QUTIBENCH_MEASUREMENTS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qutibench/catalog.hpp"

namespace qutibench {

// How the benchmark was scaled out: batching multiplies the work per run,
// thread/stream counts do not.
enum class ParallelismKind { kBatch, kThreads, kStreams, kNone };

// What the numbers cover: the accelerated compute alone, or the end-to-end
// system including host-side pre/post work.
enum class Scope { kCompute, kSystem };

std::string_view to_string(ParallelismKind kind);
std::string_view to_string(Scope scope);

// One benchmark observation. Optional fields are absent when a level does
// not report them (e.g. accuracy below level 3).
struct MeasurementRecord {
  int level = 0;  // 1 = layer, 2 = partial network, 3 = full network
  std::string platform;
  std::string mode;
  std::string datatype;
  std::string model;
  std::string layer;  // empty above level 1
  ParallelismKind parallelism_kind = ParallelismKind::kNone;
  std::int64_t parallelism_n = 1;
  Scope scope = Scope::kSystem;
  std::optional<double> latency_ms;
  std::optional<double> throughput_gops;
  std::optional<double> power_watts;
  std::optional<double> top1_pct;
  std::optional<double> top5_pct;
  // Efficiency figure quoted by the measurement source, kept so validation
  // can cross-check it against the catalog-derived value.
  std::optional<double> reported_efficiency;

  std::string source_file;
  int source_line = 0;  // 1-based line in source_file
};

enum class Severity { kWarn, kFail };

struct Finding {
  Severity severity = Severity::kWarn;
  std::string rule;     // stable machine-readable rule id
  std::string subject;  // "file:line" of the offending record
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool has_failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct IngestResult {
  std::vector<MeasurementRecord> records;
  ValidationReport report;
};

// Parses the measurement CSV:
//   level,platform,mode,datatype,model,layer,parallelism_kind,parallelism_n,
//   scope,latency_ms,throughput_gops,power_watts,top1_pct,top5_pct
//   [,reported_efficiency]
// A missing or unreadable header throws ParseError. Malformed rows are never
// silently dropped: each becomes a fail finding and the row is skipped.
IngestResult ingest_measurements(std::string_view text, std::string_view source_file = "");

// Inverse of ingest modulo comments and blank lines.
std::string serialize_measurements(const std::vector<MeasurementRecord>& records);

// GOP/s implied by a latency figure for work of `ops_per_sample` operations.
// Batch parallelism multiplies the work per run; threads/streams do not.
double throughput_from_latency(double latency_ms, std::int64_t ops_per_sample,
                               ParallelismKind kind, std::int64_t n);

// Measured throughput as a fraction of a platform's peak.
double efficiency(double throughput_gops, const PlatformEntry& peak_entry);

// Cross-checks records against the catalog and declared op counts. Keys of
// `model_ops` are "model" for whole-network records and "model/layer" for
// layer-level ones; values are ops per input sample. Emits findings ordered
// by record (file, then line), then rule:
//   - fail  efficiency-above-peak:       throughput exceeds catalog peak
//   - warn  ops-mismatch:                latency and throughput disagree by
//                                        more than 2% about the implied work
//   - warn  unknown-platform:            record references no catalog entry
//   - warn  reported-efficiency-mismatch: quoted efficiency off by > 0.01
ValidationReport consistency_check(const std::vector<MeasurementRecord>& records,
                                   const HardwareCatalog& catalog,
                                   const std::map<std::string, std::int64_t>& model_ops,
                                   double ops_tolerance = 0.02);

struct SampleStats {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n - 1 denominator)
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

SampleStats aggregate_stats(const std::vector<double>& values);

// Groups records by (platform, mode, datatype, model, level, scope,
// parallelism) and computes stats of the chosen metric for each group.
// `metric` is one of "latency_ms", "throughput_gops", "power_watts",
// "top1_pct", "top5_pct".
std::map<std::string, SampleStats> grouped_stats(const std::vector<MeasurementRecord>& records,
                                                 std::string_view metric);

}  // namespace qutibench

#endif  // QUTIBENCH_MEASUREMENTS_HPP_
