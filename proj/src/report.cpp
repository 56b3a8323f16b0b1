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

#include "qutibench/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qutibench/csv.hpp"
#include "qutibench/error.hpp"

namespace qutibench {

namespace {

std::vector<const MeasurementRecord*> records_at_level(
    const std::vector<MeasurementRecord>& records, int level) {
  std::vector<const MeasurementRecord*> out;
  for (const MeasurementRecord& r : records) {
    if (r.level == level) out.push_back(&r);
  }
  return out;
}

void render_predictions_text(std::ostringstream& out, const ReportStore& store) {
  out << "== Level 0: roofline predictions ==\n";
  if (store.predictions.empty()) {
    out << "(no data)\n";
    return;
  }
  for (const auto& p : store.predictions) {
    out << p.model << " on " << p.platform << " [" << p.mode << ", " << p.datatype << "]\n";
    out << "batch,ai_ops_per_byte,attainable_gops,bound\n";
    for (const PredictionRow& row : p.rows) {
      out << row.batch << ',' << std::fixed << std::setprecision(1)
          << row.prediction.arithmetic_intensity << ',' << std::setprecision(2)
          << row.prediction.attainable_gops << ',' << to_string(row.prediction.bound);
      if (row.prediction.missing_bandwidth) out << " (no bandwidth figure)";
      out << '\n';
      out.unsetf(std::ios::fixed);
    }
  }
}

void render_stats_text(std::ostringstream& out, const std::vector<MeasurementRecord>& records,
                       int level) {
  out << "== Level " << level << ": measurement statistics ==\n";
  auto subset_ptrs = records_at_level(records, level);
  if (subset_ptrs.empty()) {
    out << "(no data)\n";
    return;
  }
  std::vector<MeasurementRecord> subset;
  subset.reserve(subset_ptrs.size());
  for (const auto* r : subset_ptrs) subset.push_back(*r);

  out << "group,metric,count,min,max,mean,variance\n";
  for (const char* metric : {"latency_ms", "throughput_gops"}) {
    for (const auto& [key, stats] : grouped_stats(subset, metric)) {
      out << key << ',' << metric << ',' << stats.count << ',' << std::fixed
          << std::setprecision(2) << stats.min << ',' << stats.max << ',' << stats.mean << ','
          << stats.variance << '\n';
      out.unsetf(std::ios::fixed);
    }
  }
}

void render_frontier_text(std::ostringstream& out, const ReportStore& store) {
  out << "== Level 3: pareto frontier ==\n";
  auto level3 = records_at_level(store.records, 3);
  if (level3.empty() || store.objectives.size() < 2) {
    out << "(no data)\n";
    return;
  }
  std::vector<MeasurementRecord> subset;
  subset.reserve(level3.size());
  for (const auto* r : level3) subset.push_back(*r);

  ParetoResult result = pareto_frontier(subset, store.objectives);
  out << "objectives:";
  for (const Objective& o : store.objectives) {
    out << ' ' << o.field << ':'
        << (o.direction == Direction::kMaximize ? "max" : "min");
  }
  out << '\n';
  for (std::size_t idx : result.frontier) {
    const MeasurementRecord& r = subset[idx];
    out << r.model << ' ' << r.platform << ' ' << r.mode << ' ' << r.datatype << ' '
        << to_string(r.parallelism_kind) << '=' << r.parallelism_n;
    for (const Objective& o : store.objectives) {
      out << ' ' << o.field << '=' << csv::format_double(*objective_value(r, o.field));
    }
    out << '\n';
  }
  out << result.frontier.size() << " on frontier, " << result.dominated_count << " dominated\n";
}

nlohmann::json stats_to_json(const std::vector<MeasurementRecord>& records, int level) {
  nlohmann::json j = nlohmann::json::object();
  auto ptrs = records_at_level(records, level);
  if (ptrs.empty()) return j;
  std::vector<MeasurementRecord> subset;
  for (const auto* r : ptrs) subset.push_back(*r);
  for (const char* metric : {"latency_ms", "throughput_gops"}) {
    for (const auto& [key, s] : grouped_stats(subset, metric)) {
      j[std::string(metric) + "/" + key] = {{"count", s.count}, {"min", s.min},
                                            {"max", s.max},     {"mean", s.mean},
                                            {"variance", s.variance}};
    }
  }
  return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw InvalidInput("unknown report format '" + std::string(name) + "'");
}

std::string render_report(const ReportStore& store, ReportFormat format) {
  if (store.predictions.empty() && store.records.empty()) {
    throw InvalidInput("report store is empty");
  }
  switch (format) {
    case ReportFormat::kText: {
      std::ostringstream out;
      render_predictions_text(out, store);
      render_stats_text(out, store.records, 1);
      render_stats_text(out, store.records, 2);
      render_frontier_text(out, store);
      return out.str();
    }
    case ReportFormat::kCsv:
      return render_scatter_csv(store.records, store.objectives);
    case ReportFormat::kJson: {
      nlohmann::json j;
      j["level0_predictions"] = nlohmann::json::array();
      for (const auto& p : store.predictions) {
        nlohmann::json rows = nlohmann::json::array();
        for (const PredictionRow& row : p.rows) {
          rows.push_back({{"batch", row.batch},
                          {"arithmetic_intensity", row.prediction.arithmetic_intensity},
                          {"attainable_gops", row.prediction.attainable_gops},
                          {"bound", std::string(to_string(row.prediction.bound))},
                          {"missing_bandwidth", row.prediction.missing_bandwidth}});
        }
        j["level0_predictions"].push_back({{"model", p.model},
                                           {"platform", p.platform},
                                           {"mode", p.mode},
                                           {"datatype", p.datatype},
                                           {"rows", rows}});
      }
      j["level1_stats"] = stats_to_json(store.records, 1);
      j["level2_stats"] = stats_to_json(store.records, 2);

      auto level3 = records_at_level(store.records, 3);
      if (!level3.empty() && store.objectives.size() >= 2) {
        std::vector<MeasurementRecord> subset;
        for (const auto* r : level3) subset.push_back(*r);
        ParetoResult result = pareto_frontier(subset, store.objectives);
        nlohmann::json frontier = nlohmann::json::array();
        for (std::size_t idx : result.frontier) {
          const MeasurementRecord& r = subset[idx];
          nlohmann::json entry = {{"model", r.model},
                                  {"platform", r.platform},
                                  {"mode", r.mode},
                                  {"datatype", r.datatype}};
          for (const Objective& o : store.objectives) {
            entry[o.field] = *objective_value(r, o.field);
          }
          frontier.push_back(entry);
        }
        j["level3_frontier"] = frontier;
        j["level3_dominated"] = result.dominated_count;
      } else {
        j["level3_frontier"] = nullptr;
      }
      return j.dump(2) + "\n";
    }
  }
  throw InvalidInput("unknown report format");
}

std::string render_scatter_csv(const std::vector<MeasurementRecord>& records,
                               const std::vector<Objective>& objectives) {
  std::vector<MeasurementRecord> subset;
  for (const MeasurementRecord& r : records) {
    if (r.level == 3) subset.push_back(r);
  }

  std::ostringstream out;
  out << "model,platform,mode,datatype,parallelism_kind,parallelism_n,scope";
  for (const Objective& o : objectives) out << ',' << o.field;
  out << ",frontier\n";
  if (subset.empty()) return out.str();

  ParetoResult result = pareto_frontier(subset, objectives);
  std::set<std::size_t> on_frontier(result.frontier.begin(), result.frontier.end());
  std::set<std::size_t> excluded;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (const Objective& o : objectives) {
      if (!objective_value(subset[i], o.field).has_value()) excluded.insert(i);
    }
  }

  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (excluded.count(i) != 0) continue;
    const MeasurementRecord& r = subset[i];
    out << r.model << ',' << r.platform << ',' << r.mode << ',' << r.datatype << ','
        << to_string(r.parallelism_kind) << ',' << r.parallelism_n << ',' << to_string(r.scope);
    for (const Objective& o : objectives) {
      out << ',' << csv::format_double(*objective_value(r, o.field));
    }
    out << ',' << (on_frontier.count(i) != 0 ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace qutibench
