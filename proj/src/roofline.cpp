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

#include "qutibench/roofline.hpp"

#include <algorithm>
#include <cmath>

#include "qutibench/error.hpp"

namespace qutibench {

std::string_view to_string(Bound bound) {
  switch (bound) {
    case Bound::kCompute: return "compute_bound";
    case Bound::kMemory: return "memory_bound";
    case Bound::kRidge: return "ridge";
  }
  return "?";
}

double arithmetic_intensity(const WorkloadPoint& w, const DatatypeSpec& dtype) {
  if (w.batch <= 0) throw InvalidInput("batch must be positive");
  if (w.total_weights <= 0) throw InvalidInput("workload has no weight traffic");
  if (dtype.bits <= 0) throw InvalidInput("datatype has no bit width");
  const double weight_bytes = static_cast<double>(w.total_weights) * dtype.bytes();
  return static_cast<double>(w.batch) * static_cast<double>(w.total_ops) / weight_bytes;
}

double attainable_gops(double intensity, double peak_tops, double mem_bw_gbps) {
  return std::min(peak_tops * 1000.0, intensity * mem_bw_gbps);
}

double ridge_intensity(double peak_tops, double mem_bw_gbps) {
  if (mem_bw_gbps <= 0.0) throw InvalidInput("memory bandwidth must be positive");
  return peak_tops * 1000.0 / mem_bw_gbps;
}

Bound classify(double intensity, double peak_tops, double mem_bw_gbps) {
  const double ridge = ridge_intensity(peak_tops, mem_bw_gbps);
  if (intensity > ridge) return Bound::kCompute;
  if (intensity < ridge) return Bound::kMemory;
  return Bound::kRidge;
}

Prediction predict(const WorkloadPoint& w, const PlatformEntry& entry) {
  Prediction p;
  p.workload = w;
  p.arithmetic_intensity = arithmetic_intensity(w, entry.datatype);
  if (entry.mem_bw_gbps.has_value()) {
    p.attainable_gops =
        attainable_gops(p.arithmetic_intensity, entry.peak_tops, *entry.mem_bw_gbps);
    p.bound = classify(p.arithmetic_intensity, entry.peak_tops, *entry.mem_bw_gbps);
  } else {
    // No bandwidth figure: only the compute roof is known.
    p.attainable_gops = entry.peak_tops * 1000.0;
    p.bound = Bound::kCompute;
    p.missing_bandwidth = true;
  }
  return p;
}

std::vector<PredictionRow> prediction_table(const ModelRequirements& reqs,
                                            const std::vector<std::int64_t>& batches,
                                            const PlatformEntry& entry) {
  std::vector<PredictionRow> rows;
  rows.reserve(batches.size());
  for (std::int64_t b : batches) {
    WorkloadPoint w{b, reqs.total_ops, reqs.total_weights};
    rows.push_back(PredictionRow{b, predict(w, entry)});
  }
  return rows;
}

std::vector<CurvePoint> roofline_curve(const PlatformEntry& entry,
                                       const std::vector<double>& intensities) {
  if (!entry.mem_bw_gbps.has_value()) {
    throw InvalidInput("platform entry has no memory bandwidth; no roofline exists");
  }
  const double bw = *entry.mem_bw_gbps;
  const double ridge = ridge_intensity(entry.peak_tops, bw);

  std::vector<CurvePoint> points;
  points.reserve(intensities.size() + 1);
  double prev = 0.0;
  bool ridge_sampled = false;
  for (double x : intensities) {
    if (x <= 0.0) throw InvalidInput("intensities must be positive");
    if (x < prev) throw InvalidInput("intensities must be ascending");
    prev = x;
    if (x == ridge) ridge_sampled = true;
    points.push_back({x, attainable_gops(x, entry.peak_tops, bw), x == ridge});
  }
  if (!ridge_sampled) {
    points.push_back({ridge, entry.peak_tops * 1000.0, true});
    std::sort(points.begin(), points.end(),
              [](const CurvePoint& a, const CurvePoint& b) { return a.intensity < b.intensity; });
  }
  return points;
}

}  // namespace qutibench
