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

#ifndef QUTIBENCH_ROOFLINE_HPP_
#define QUTIBENCH_ROOFLINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qutibench/catalog.hpp"
#include "qutibench/requirements.hpp"

namespace qutibench {

// A batched inference workload characterized by its total compute and the
// parameter traffic it must pull from external memory.
struct WorkloadPoint {
  std::int64_t batch = 1;
  std::int64_t total_ops = 0;      // per input sample
  std::int64_t total_weights = 0;  // parameter elements, fetched once per batch
};

enum class Bound { kCompute, kMemory, kRidge };

std::string_view to_string(Bound bound);

struct Prediction {
  WorkloadPoint workload;
  double arithmetic_intensity = 0.0;  // ops per byte of weight traffic
  double attainable_gops = 0.0;       // min(compute roof, bandwidth * AI)
  Bound bound = Bound::kCompute;
  // Set when the platform entry lacks a bandwidth figure; the prediction
  // then degrades to the compute roof alone.
  bool missing_bandwidth = false;
};

// ops/byte under a weights-only traffic model: the whole batch shares one
// sweep over the parameters.
double arithmetic_intensity(const WorkloadPoint& w, const DatatypeSpec& dtype);

// GOP/s attainable at the given intensity. Peak compute is converted from
// TOP/s so that the two roofs share units.
double attainable_gops(double intensity, double peak_tops, double mem_bw_gbps);

// Ridge point: the intensity at which the two roofs intersect.
double ridge_intensity(double peak_tops, double mem_bw_gbps);

Bound classify(double intensity, double peak_tops, double mem_bw_gbps);

// Prediction for one workload on one platform entry.
Prediction predict(const WorkloadPoint& w, const PlatformEntry& entry);

struct PredictionRow {
  std::int64_t batch = 0;
  Prediction prediction;
};

// One prediction per batch size, preserving order.
std::vector<PredictionRow> prediction_table(const ModelRequirements& reqs,
                                            const std::vector<std::int64_t>& batches,
                                            const PlatformEntry& entry);

struct CurvePoint {
  double intensity = 0.0;
  double gops = 0.0;
  bool is_ridge = false;
};

// Roofline samples for plotting at the given ascending positive intensities;
// the ridge point is always included even when not sampled.
std::vector<CurvePoint> roofline_curve(const PlatformEntry& entry,
                                       const std::vector<double>& intensities);

}  // namespace qutibench

#endif  // QUTIBENCH_ROOFLINE_HPP_
