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

// End-to-end acceptance checks against the published reference figures.
// Prints one pass/fail line per criterion; exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "qutibench/catalog.hpp"
#include "qutibench/measurements.hpp"
#include "qutibench/pareto.hpp"
#include "qutibench/requirements.hpp"
#include "qutibench/roofline.hpp"
#include "qutibench/topology.hpp"

using namespace qutibench;

namespace {

int failures = 0;

void verdict(int criterion, const std::string& what, bool ok,
             const std::string& detail = "") {
  std::cout << (ok ? "pass" : "FAIL") << "  criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << '\n';
  if (!ok) ++failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NetworkModel load_model(const std::string& name) {
  return parse_topology(read_file(std::string(QB_DATA_DIR) + "/models/" + name + ".topo"),
                        name);
}

std::vector<MeasurementRecord> load_measurements(const std::string& file) {
  auto result =
      ingest_measurements(read_file(std::string(QB_DATA_DIR) + "/measurements/" + file), file);
  if (result.report.has_failures()) {
    std::cerr << "fixture " << file << " failed ingest\n" << result.report.to_text();
    std::exit(2);
  }
  return result.records;
}

// Published per-layer compute of the ResNet50 convolutions (MOP), as printed
// in the layer-level result table.
const std::vector<std::pair<std::string, double>> kPublishedLayerMops = {
    {"res2a_branch2a", 25.7},  {"res2a_branch2b", 231.2}, {"res2a_branch2c", 102.8},
    {"res2a_branch1", 102.8},  {"res2b_branch2a", 102.8}, {"res2b_branch2b", 231.2},
    {"res2b_branch2c", 102.8}, {"res2c_branch2a", 102.8}, {"res2c_branch2b", 231.2},
    {"res2c_branch2c", 102.8}, {"res3a_branch2a", 51.4},  {"res3a_branch2b", 231.2},
    {"res3a_branch2c", 102.8}, {"res3a_branch1", 205.5},  {"res3b_branch2a", 102.8},
    {"res3b_branch2b", 231.2}, {"res3b_branch2c", 102.8}, {"res3c_branch2a", 102.8},
    {"res3c_branch2b", 231.2}, {"res3c_branch2c", 102.8}, {"res3d_branch2a", 102.8},
    {"res3d_branch2b", 231.2}, {"res3d_branch2c", 102.8}, {"res4a_branch2a", 51.4},
    {"res4a_branch2b", 231.2}, {"res4a_branch2c", 102.8}, {"res4a_branch1", 205.5},
    {"res4b_branch2a", 102.8}, {"res4b_branch2b", 231.2}, {"res4b_branch2c", 102.8},
    {"res4c_branch2a", 102.8}, {"res4c_branch2b", 231.2}, {"res4c_branch2c", 102.8},
    {"res4d_branch2a", 102.8}, {"res4d_branch2b", 231.2}, {"res4d_branch2c", 102.8},
    {"res4e_branch2a", 102.8}, {"res4e_branch2b", 231.2}, {"res4e_branch2c", 102.8},
    {"res4f_branch2a", 102.8}, {"res4f_branch2b", 231.2}, {"res4f_branch2c", 102.8},
    {"res5a_branch2a", 51.4},  {"res5a_branch2b", 231.2}, {"res5a_branch2c", 102.8},
    {"res5a_branch1", 205.5},  {"res5b_branch2a", 102.8}, {"res5b_branch2b", 231.2},
    {"res5b_branch2c", 102.8}, {"res5c_branch2a", 102.8}, {"res5c_branch2b", 231.2},
    {"res5c_branch2c", 102.8}};

void criterion_1_per_layer_ops(const NetworkModel& resnet) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, const LayerSpec*> by_name;
  for (const LayerSpec& l : resnet.layers) by_name[l.name] = &l;

  std::size_t matched = 0;
  for (const auto& [name, mop] : kPublishedLayerMops) {
    auto it = by_name.find(name);
    if (it == by_name.end()) continue;
    const double computed = layer_requirements(*it->second).ops / 1e6;
    if (std::abs(computed - mop) <= 0.05) ++matched;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  verdict(1, "52/52 published per-layer MOP values reproduced within 0.05 MOP",
          matched == 52 && kPublishedLayerMops.size() == 52 && ms < 1000.0,
          std::to_string(matched) + "/52 in " + std::to_string(ms) + " ms");
}

void criterion_2_model_totals(const ModelRequirements& resnet,
                              const ModelRequirements& googlenet) {
  const bool ok = std::abs(resnet.total_ops / 1e9 - 7.72) / 7.72 <= 0.015 &&
                  std::abs(resnet.total_weights / 1e6 - 25.50) / 25.50 <= 0.01 &&
                  std::abs(googlenet.total_ops / 1e9 - 3.13) / 3.13 <= 0.015 &&
                  std::abs(googlenet.total_weights / 1e6 - 5.98) / 5.98 <= 0.01;
  std::ostringstream detail;
  detail.precision(3);
  detail << resnet.total_ops / 1e9 << " GOP / " << resnet.total_weights / 1e6 << " ME; "
         << googlenet.total_ops / 1e9 << " GOP / " << googlenet.total_weights / 1e6 << " ME";
  verdict(2, "model totals match 7.72/25.50 and 3.13/5.98", ok, detail.str());
}

void criterion_3_arithmetic_intensity() {
  // The published AI column was derived from the rounded GOP/ME totals of
  // the same table, so those are the inputs here.
  const WorkloadPoint resnet1{1, 7'720'000'000, 25'500'000};
  const WorkloadPoint resnet8{8, 7'720'000'000, 25'500'000};
  const WorkloadPoint google1{1, 3'130'000'000, 5'980'000};
  const WorkloadPoint google8{8, 3'130'000'000, 5'980'000};
  const DatatypeSpec int8{"INT8", 8}, fp16{"FP16", 16};

  const std::vector<std::pair<double, double>> cases = {
      {arithmetic_intensity(resnet1, int8), 303.0},
      {arithmetic_intensity(resnet8, int8), 2422.0},
      {arithmetic_intensity(resnet1, fp16), 151.0},
      {arithmetic_intensity(resnet8, fp16), 1211.0},
      {arithmetic_intensity(google1, int8), 523.0},
      {arithmetic_intensity(google8, int8), 4188.0},
      {arithmetic_intensity(google1, fp16), 262.0},
      {arithmetic_intensity(google8, fp16), 2094.0}};
  std::size_t matched = 0;
  for (const auto& [computed, published] : cases) {
    if (std::abs(computed - published) <= 1.0) ++matched;
  }
  verdict(3, "all 8 published AI values reproduced within 1 OP/byte", matched == 8,
          std::to_string(matched) + "/8");
}

void criterion_4_roofline_predictions(const HardwareCatalog& catalog,
                                      const ModelRequirements& resnet,
                                      const ModelRequirements& googlenet) {
  const std::vector<std::tuple<std::string, std::string, std::string, double>> entries = {
      {"Nvidia Jetson TX2", "MaxN", "FP32", 667.0},
      {"Nvidia Jetson TX2", "MaxN", "FP16", 1333.0},
      {"Nvidia Jetson TX2", "MaxQ", "FP32", 437.0},
      {"Nvidia Jetson TX2", "MaxQ", "FP16", 874.0},
      {"Xilinx ZCU104 DPU", "666MHz", "INT8", 4604.0},
      {"Xilinx ZCU104 DPU", "750MHz", "INT8", 5357.0}};
  bool ok = true;
  for (const auto& [platform, mode, datatype, expected_gops] : entries) {
    const PlatformEntry* entry = catalog.find(platform, mode, datatype);
    if (entry == nullptr) {
      ok = false;
      continue;
    }
    for (const ModelRequirements* reqs : {&resnet, &googlenet}) {
      Prediction p = predict({1, reqs->total_ops, reqs->total_weights}, *entry);
      if (p.attainable_gops != expected_gops || p.bound != Bound::kCompute ||
          p.missing_bandwidth) {
        ok = false;
      }
    }
  }
  verdict(4, "six prediction-table values exact and compute-bound for both models", ok);
}

void criterion_5_efficiency(const HardwareCatalog& catalog,
                            const std::vector<MeasurementRecord>& level3) {
  // The published efficiencies normalize every TX2 row by the MaxN FP16
  // peak, regardless of the row's own operating mode.
  const PlatformEntry* denominator = catalog.find("Nvidia Jetson TX2", "MaxN", "FP16");
  bool ok = denominator != nullptr;

  int rows = 0;
  double lo = 1e9, hi = -1e9;
  for (const MeasurementRecord& r : level3) {
    if (r.platform.find("TX2") == std::string::npos) continue;
    if (!r.throughput_gops.has_value() || !r.reported_efficiency.has_value()) continue;
    ++rows;
    const double eff = efficiency(*r.throughput_gops, *denominator);
    if (std::abs(eff - *r.reported_efficiency) > 0.01) ok = false;
    if (r.model == "resnet50" && r.mode == "MaxN" && r.datatype == "FP16" &&
        r.scope == Scope::kSystem) {
      lo = std::min(lo, eff);
      hi = std::max(hi, eff);
    }
  }
  // Published range: "from 41.1 to 60.7% efficiency".
  ok = ok && rows > 0 && std::abs(lo - 0.411) < 0.005 && std::abs(hi - 0.607) < 0.005;

  // The ZCU104 whole-network efficiencies are documented as inconsistent
  // with the catalog peak; the validator must flag them.
  std::map<std::string, std::int64_t> no_ops;
  auto zcu104_only = level3;
  std::erase_if(zcu104_only, [](const MeasurementRecord& r) {
    return r.platform.find("ZCU104") == std::string::npos;
  });
  auto zcu104_report = consistency_check(zcu104_only, catalog, no_ops);
  const bool zcu104_flagged = std::any_of(
      zcu104_report.findings.begin(), zcu104_report.findings.end(),
      [](const Finding& f) { return f.rule == "reported-efficiency-mismatch"; });

  std::ostringstream detail;
  detail.precision(3);
  detail << rows << " TX2 rows, system range " << lo << "-" << hi
         << (zcu104_flagged ? ", ZCU104 flagged" : ", ZCU104 NOT flagged");
  verdict(5, "TX2 efficiencies within 0.01, range 0.41-0.61, ZCU104 discrepancy flagged",
          ok && zcu104_flagged, detail.str());
}

void criterion_6_consistency(const HardwareCatalog& catalog, const NetworkModel& resnet,
                             const ModelRequirements& resnet_reqs) {
  std::map<std::string, std::int64_t> ops;
  ops["resnet50"] = resnet_reqs.total_ops;
  for (std::size_t i = 0; i < resnet.layers.size(); ++i) {
    ops["resnet50/" + resnet.layers[i].name] = resnet_reqs.per_layer[i].ops;
  }

  // Single-thread layer rows: the multi-thread rows scale past the printed
  // per-pass arithmetic (two DPU cores) and are excluded by design.
  auto zcu104 = load_measurements("level1_zcu104_resnet50.csv");
  std::erase_if(zcu104, [](const MeasurementRecord& r) { return r.parallelism_n != 1; });

  // Whole-network rows: end-to-end (system) scope; two accelerator-only
  // rows are internally inconsistent in the source and sit just past 2%.
  auto tx2 = load_measurements("level3_resnet50.csv");
  std::erase_if(tx2, [](const MeasurementRecord& r) {
    return r.platform.find("TX2") == std::string::npos || r.scope != Scope::kSystem;
  });

  std::vector<MeasurementRecord> records = zcu104;
  records.insert(records.end(), tx2.begin(), tx2.end());

  // A full-corpus run also has to stay under the time budget.
  std::vector<MeasurementRecord> everything;
  for (const char* file :
       {"level1_zcu104_resnet50.csv", "level1_tx2_resnet50.csv", "level2_tx2_resnet50.csv",
        "level3_resnet50.csv", "level3_googlenetv1.csv"}) {
    auto batch = load_measurements(file);
    everything.insert(everything.end(), batch.begin(), batch.end());
  }

  const auto start = std::chrono::steady_clock::now();
  auto report = consistency_check(records, catalog, ops);
  auto full_report = consistency_check(everything, catalog, ops);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  int mismatches = 0;
  for (const Finding& f : report.findings) {
    if (f.rule == "ops-mismatch" || f.rule == "efficiency-above-peak") ++mismatches;
  }
  (void)full_report;
  verdict(6,
          "throughput/latency consistent at 2% for ZCU104 layer rows (t=1) and TX2 "
          "whole-network system rows",
          mismatches == 0 && !records.empty() && ms < 1000.0,
          std::to_string(records.size()) + " records, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(ms) + " ms");
}

void criterion_7_statistics() {
  auto level2 = load_measurements("level2_tx2_resnet50.csv");
  std::vector<double> latencies;
  for (const MeasurementRecord& r : level2) {
    if (r.mode == "MaxN" && r.parallelism_n == 1 && r.latency_ms.has_value()) {
      latencies.push_back(*r.latency_ms);
    }
  }
  SampleStats l2 = aggregate_stats(latencies);

  auto level1 = load_measurements("level1_tx2_resnet50.csv");
  std::vector<double> b128;
  for (const MeasurementRecord& r : level1) {
    // The published variance covers the layers of the first residual stack
    // of each stage (res2a, res3a, res4a, res5a).
    const bool stage_a = r.layer.rfind("res2a", 0) == 0 || r.layer.rfind("res3a", 0) == 0 ||
                         r.layer.rfind("res4a", 0) == 0 || r.layer.rfind("res5a", 0) == 0;
    if (r.parallelism_n == 128 && stage_a && r.latency_ms.has_value()) {
      b128.push_back(*r.latency_ms);
    }
  }
  SampleStats l1 = aggregate_stats(b128);

  const bool ok = l2.min == 1.02 && l2.max == 1.73 && std::abs(l2.variance - 0.04) <= 0.005 &&
                  b128.size() == 16 && std::abs(l1.variance - 79.42) <= 0.5;
  std::ostringstream detail;
  detail.precision(4);
  detail << "L2 b=1: min " << l2.min << " max " << l2.max << " var " << l2.variance
         << "; L1 b=128 var " << l1.variance;
  verdict(7, "latency statistics match min 1.02 / max 1.73 / var 0.04 and var 79.42", ok,
          detail.str());
}

void criterion_8_pareto() {
  std::vector<MeasurementRecord> records = load_measurements("level3_resnet50.csv");
  auto googlenet = load_measurements("level3_googlenetv1.csv");
  records.insert(records.end(), googlenet.begin(), googlenet.end());
  // "System throughput" is the end-to-end column.
  std::erase_if(records, [](const MeasurementRecord& r) { return r.scope != Scope::kSystem; });

  const std::vector<Objective> objectives = {{"top5_pct", Direction::kMaximize},
                                             {"throughput_gops", Direction::kMaximize}};
  ParetoResult result = pareto_frontier(records, objectives);

  // Brute-force reference, restated independently of the library.
  std::set<std::size_t> reference;
  for (std::size_t i = 0; i < records.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < records.size() && !dominated; ++j) {
      if (i == j) continue;
      const double ti = *records[i].top5_pct, tj = *records[j].top5_pct;
      const double gi = *records[i].throughput_gops, gj = *records[j].throughput_gops;
      dominated = tj >= ti && gj >= gi && (tj > ti || gj > gi);
    }
    if (!dominated) reference.insert(i);
  }
  bool ok = std::set<std::size_t>(result.frontier.begin(), result.frontier.end()) == reference;

  // The frontier must be exactly the two published best compromises.
  ok = ok && result.frontier.size() == 2;
  if (ok) {
    const MeasurementRecord& first = records[result.frontier[0]];
    const MeasurementRecord& second = records[result.frontier[1]];
    ok = first.model == "resnet50" && first.platform.find("TX2") != std::string::npos &&
         *first.top5_pct == 92.12 && *first.throughput_gops == 809.47 &&
         second.model == "resnet50" && second.platform.find("ZCU104") != std::string::npos &&
         *second.top5_pct == 90.85 && *second.throughput_gops == 948.05;
  }

  // Randomized property suite.
  std::mt19937 rng(8);
  bool properties = true;
  for (int trial = 0; trial < 1000 && properties; ++trial) {
    std::vector<MeasurementRecord> pts;
    const int n = static_cast<int>(qutibench::testing::rand_int(rng, 1, 200));
    for (int i = 0; i < n; ++i) {
      MeasurementRecord r;
      r.level = 3;
      r.source_line = i + 1;
      r.top5_pct = static_cast<double>(qutibench::testing::rand_int(rng, 0, 12));
      r.throughput_gops = static_cast<double>(qutibench::testing::rand_int(rng, 0, 12));
      pts.push_back(r);
    }
    auto res = pareto_frontier(pts, objectives);
    std::set<std::size_t> mine(res.frontier.begin(), res.frontier.end());

    // Oracle equivalence.
    std::set<std::size_t> oracle;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
        if (i == j) continue;
        const double ti = *pts[i].top5_pct, tj = *pts[j].top5_pct;
        const double gi = *pts[i].throughput_gops, gj = *pts[j].throughput_gops;
        dominated = tj >= ti && gj >= gi && (tj > ti || gj > gi);
      }
      if (!dominated) oracle.insert(i);
    }
    if (mine != oracle) properties = false;

    // Direction inversion.
    auto negated = pts;
    for (auto& r : negated) r.top5_pct = -*r.top5_pct;
    auto inv = pareto_frontier(negated, {{"top5_pct", Direction::kMinimize},
                                         {"throughput_gops", Direction::kMaximize}});
    if (std::set<std::size_t>(inv.frontier.begin(), inv.frontier.end()) != mine) {
      properties = false;
    }

    // Monotone transform invariance.
    auto warped = pts;
    for (auto& r : warped) r.top5_pct = std::exp(*r.top5_pct / 4.0);
    auto w = pareto_frontier(warped, objectives);
    if (std::set<std::size_t>(w.frontier.begin(), w.frontier.end()) != mine) {
      properties = false;
    }

    // Idempotence.
    std::vector<MeasurementRecord> members;
    for (std::size_t idx : res.frontier) members.push_back(pts[idx]);
    auto again = pareto_frontier(members, objectives);
    if (again.frontier.size() != members.size() || again.dominated_count != 0) {
      properties = false;
    }
  }

  verdict(8, "level-3 frontier matches the oracle exactly; 1000-trial property suite",
          ok && properties,
          std::to_string(result.frontier.size()) + " frontier members");
}

void criterion_9_round_trips() {
  std::mt19937 rng(9);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    NetworkModel model = qutibench::testing::random_model(rng, 10);
    if (parse_topology(serialize_topology(model), model.name) != model) ok = false;

    HardwareCatalog catalog = qutibench::testing::random_catalog(rng, 5);
    HardwareCatalog catalog2 = parse_catalog(serialize_catalog(catalog));
    if (serialize_catalog(catalog2) != serialize_catalog(catalog)) ok = false;

    auto records = qutibench::testing::random_records(rng, 10);
    auto result = ingest_measurements(serialize_measurements(records), "rt");
    if (!result.report.findings.empty() ||
        serialize_measurements(result.records) != serialize_measurements(records)) {
      ok = false;
    }
  }
  verdict(9, "topology/catalog/measurement round-trips over 1000 random inputs", ok);
}

void criterion_10_training_rules() {
  std::mt19937 rng(10);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    ModelRequirements reqs = model_requirements(qutibench::testing::random_model(rng, 10));
    TrainingRequirements t = training_requirements(reqs);
    if (t.total_ops - reqs.total_weights != 3 * reqs.total_ops) ok = false;
    if (t.weight_updates != 3 * reqs.total_weights) ok = false;
  }

  // Published most-demanding inference workload: 412.17 GOP per pass maps
  // to a 1236.64 GOP training pass (weights are negligible at this scale).
  ModelRequirements big;
  big.total_ops = 412'170'000'000;
  const double train_gop = training_requirements(big).total_ops / 1e9;
  ok = ok && std::abs(train_gop - 1236.64) / 1236.64 <= 0.001;

  std::ostringstream detail;
  detail.precision(6);
  detail << "412.17 GOP -> " << train_gop << " GOP";
  verdict(10, "training identities exact for 1000 random models; 412.17 -> ~1236.5 GOP", ok,
          detail.str());
}

}  // namespace

int main() {
  const NetworkModel resnet = load_model("resnet50");
  const NetworkModel googlenet = load_model("googlenetv1");
  const ModelRequirements resnet_reqs = model_requirements(resnet);
  const ModelRequirements googlenet_reqs = model_requirements(googlenet);
  const HardwareCatalog catalog =
      parse_catalog(read_file(std::string(QB_DATA_DIR) + "/catalog/platforms.csv"));

  std::vector<MeasurementRecord> level3 = load_measurements("level3_resnet50.csv");
  {
    auto googlenet_l3 = load_measurements("level3_googlenetv1.csv");
    level3.insert(level3.end(), googlenet_l3.begin(), googlenet_l3.end());
  }

  criterion_1_per_layer_ops(resnet);
  criterion_2_model_totals(resnet_reqs, googlenet_reqs);
  criterion_3_arithmetic_intensity();
  criterion_4_roofline_predictions(catalog, resnet_reqs, googlenet_reqs);
  criterion_5_efficiency(catalog, level3);
  criterion_6_consistency(catalog, resnet, resnet_reqs);
  criterion_7_statistics();
  criterion_8_pareto();
  criterion_9_round_trips();
  criterion_10_training_rules();

  if (failures == 0) {
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
