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

#include "qutibench/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "qutibench/csv.hpp"
#include "qutibench/error.hpp"

namespace qutibench {

namespace {

constexpr std::string_view kHeader =
    "level,platform,mode,datatype,model,layer,parallelism_kind,parallelism_n,scope,"
    "latency_ms,throughput_gops,power_watts,top1_pct,top5_pct,reported_efficiency";

std::optional<ParallelismKind> parallelism_from_string(std::string_view s) {
  if (s == "batch") return ParallelismKind::kBatch;
  if (s == "threads") return ParallelismKind::kThreads;
  if (s == "streams") return ParallelismKind::kStreams;
  if (s == "none" || s.empty()) return ParallelismKind::kNone;
  return std::nullopt;
}

std::optional<Scope> scope_from_string(std::string_view s) {
  if (s == "compute") return Scope::kCompute;
  if (s == "system") return Scope::kSystem;
  return std::nullopt;
}

std::string subject_of(std::string_view file, int line) {
  return std::string(file) + ":" + std::to_string(line);
}

void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    return a.rule < b.rule;
  });
}

void append_opt(std::ostringstream& out, const std::optional<double>& v) {
  out << ',';
  if (v.has_value()) out << csv::format_double(*v);
}

}  // namespace

std::string_view to_string(ParallelismKind kind) {
  switch (kind) {
    case ParallelismKind::kBatch: return "batch";
    case ParallelismKind::kThreads: return "threads";
    case ParallelismKind::kStreams: return "streams";
    case ParallelismKind::kNone: return "none";
  }
  return "?";
}

std::string_view to_string(Scope scope) {
  return scope == Scope::kCompute ? "compute" : "system";
}

bool ValidationReport::has_failures() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::kFail; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const Finding& f : findings) {
    out << (f.severity == Severity::kFail ? "fail" : "warn") << ' ' << f.rule << ' '
        << f.subject << ": " << f.message << '\n';
  }
  out << findings.size() << " finding(s)\n";
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::json j;
  j["findings"] = nlohmann::json::array();
  for (const Finding& f : findings) {
    j["findings"].push_back({{"severity", f.severity == Severity::kFail ? "fail" : "warn"},
                             {"rule", f.rule},
                             {"subject", f.subject},
                             {"message", f.message}});
  }
  j["count"] = findings.size();
  return j.dump(2) + "\n";
}

IngestResult ingest_measurements(std::string_view text, std::string_view source_file) {
  IngestResult result;
  bool header_seen = false;

  auto fail_row = [&](int lineno, std::string rule, std::string message) {
    result.report.findings.push_back(
        Finding{Severity::kFail, std::move(rule), subject_of(source_file, lineno),
                std::move(message)});
  };

  const auto lines = csv::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;

    auto fields = csv::split_line(line);
    if (!header_seen) {
      if (fields.empty() || fields[0] != "level") {
        throw ParseError(lineno, "expected header starting with 'level'");
      }
      header_seen = true;
      continue;
    }

    if (fields.size() < 14 || fields.size() > 15) {
      fail_row(lineno, "malformed-row",
               "expected 14-15 fields, got " + std::to_string(fields.size()));
      continue;
    }
    fields.resize(15);

    try {
      MeasurementRecord r;
      r.source_file = source_file;
      r.source_line = lineno;

      auto level = csv::parse_int(fields[0], lineno, "level");
      if (!level.has_value() || *level < 1 || *level > 3) {
        fail_row(lineno, "malformed-row", "level must be 1, 2, or 3");
        continue;
      }
      r.level = static_cast<int>(*level);
      r.platform = fields[1];
      r.mode = fields[2];
      r.datatype = fields[3];
      r.model = fields[4];
      r.layer = fields[5];
      if (r.platform.empty() || r.model.empty()) {
        fail_row(lineno, "malformed-row", "platform and model must be nonempty");
        continue;
      }
      if (r.level <= 2 && r.layer.empty()) {
        fail_row(lineno, "malformed-row", "levels 1-2 require a layer name");
        continue;
      }

      auto kind = parallelism_from_string(fields[6]);
      if (!kind.has_value()) {
        fail_row(lineno, "malformed-row", "unknown parallelism_kind '" + fields[6] + "'");
        continue;
      }
      r.parallelism_kind = *kind;
      r.parallelism_n = csv::parse_int(fields[7], lineno, "parallelism_n").value_or(1);
      if (r.parallelism_n < 1) {
        fail_row(lineno, "malformed-row", "parallelism_n must be >= 1");
        continue;
      }

      auto scope = scope_from_string(fields[8]);
      if (!scope.has_value()) {
        fail_row(lineno, "malformed-row", "unknown scope '" + fields[8] + "'");
        continue;
      }
      r.scope = *scope;

      r.latency_ms = csv::parse_double(fields[9], lineno, "latency_ms");
      if (r.latency_ms.has_value() && *r.latency_ms <= 0.0) {
        fail_row(lineno, "nonpositive-latency", "latency_ms must be positive");
        continue;
      }
      r.throughput_gops = csv::parse_double(fields[10], lineno, "throughput_gops");
      r.power_watts = csv::parse_double(fields[11], lineno, "power_watts");
      r.top1_pct = csv::parse_double(fields[12], lineno, "top1_pct");
      r.top5_pct = csv::parse_double(fields[13], lineno, "top5_pct");
      r.reported_efficiency = csv::parse_double(fields[14], lineno, "reported_efficiency");

      for (const auto& [value, what] :
           {std::pair{r.top1_pct, "top1_pct"}, std::pair{r.top5_pct, "top5_pct"}}) {
        if (value.has_value() && (*value < 0.0 || *value > 100.0)) {
          fail_row(lineno, "accuracy-out-of-range",
                   std::string(what) + " must be within [0, 100]");
          r.level = 0;  // poison so the record is dropped below
        }
      }
      if (r.level == 0) continue;

      result.records.push_back(std::move(r));
    } catch (const ParseError& e) {
      fail_row(lineno, "malformed-row", e.what());
    }
  }

  if (!header_seen) throw ParseError(0, "empty measurements file: missing header");
  sort_findings(result.report.findings);
  return result;
}

std::string serialize_measurements(const std::vector<MeasurementRecord>& records) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const MeasurementRecord& r : records) {
    out << r.level << ',' << r.platform << ',' << r.mode << ',' << r.datatype << ','
        << r.model << ',' << r.layer << ',' << to_string(r.parallelism_kind) << ','
        << r.parallelism_n << ',' << to_string(r.scope);
    append_opt(out, r.latency_ms);
    append_opt(out, r.throughput_gops);
    append_opt(out, r.power_watts);
    append_opt(out, r.top1_pct);
    append_opt(out, r.top5_pct);
    append_opt(out, r.reported_efficiency);
    out << '\n';
  }
  return out.str();
}

double throughput_from_latency(double latency_ms, std::int64_t ops_per_sample,
                               ParallelismKind kind, std::int64_t n) {
  if (latency_ms <= 0.0) throw InvalidInput("latency must be positive");
  if (ops_per_sample <= 0) throw InvalidInput("ops must be positive");
  if (n < 1) throw InvalidInput("parallelism count must be >= 1");
  // A batch runs n samples per pass; threads/streams pipeline the same
  // per-pass work, so they do not multiply it.
  const double count = kind == ParallelismKind::kBatch ? static_cast<double>(n) : 1.0;
  return static_cast<double>(ops_per_sample) * count / (latency_ms * 1e6);
}

double efficiency(double throughput_gops, const PlatformEntry& peak_entry) {
  if (peak_entry.peak_tops <= 0.0) throw InvalidInput("platform entry has no peak performance");
  return throughput_gops / (peak_entry.peak_tops * 1000.0);
}

ValidationReport consistency_check(const std::vector<MeasurementRecord>& records,
                                   const HardwareCatalog& catalog,
                                   const std::map<std::string, std::int64_t>& model_ops,
                                   double ops_tolerance) {
  ValidationReport report;
  auto add = [&report](Severity sev, std::string rule, const MeasurementRecord& r,
                       std::string message) {
    report.findings.push_back(Finding{sev, std::move(rule),
                                      subject_of(r.source_file, r.source_line),
                                      std::move(message)});
  };

  for (const MeasurementRecord& r : records) {
    const PlatformEntry* entry = catalog.find(r.platform, r.mode, r.datatype);
    if (entry == nullptr) {
      add(Severity::kWarn, "unknown-reference", r,
          "no catalog entry for (" + r.platform + ", " + r.mode + ", " + r.datatype + ")");
    } else if (r.throughput_gops.has_value()) {
      const double eff = efficiency(*r.throughput_gops, *entry);
      if (eff > 1.0) {
        add(Severity::kFail, "efficiency-above-peak", r,
            "throughput " + csv::format_double(*r.throughput_gops) + " GOP/s exceeds peak " +
                csv::format_double(entry->peak_tops * 1000.0) + " GOP/s");
      }
      if (r.reported_efficiency.has_value() && std::abs(eff - *r.reported_efficiency) > 0.01) {
        std::ostringstream msg;
        msg.precision(4);
        msg << std::fixed << "reported efficiency " << *r.reported_efficiency
            << " differs from recomputed " << eff;
        add(Severity::kWarn, "reported-efficiency-mismatch", r, msg.str());
      }
    }

    const std::string ops_key = r.layer.empty() ? r.model : r.model + "/" + r.layer;
    auto it = model_ops.find(ops_key);
    if (it == model_ops.end()) {
      add(Severity::kWarn, "unknown-reference", r, "no declared ops for '" + ops_key + "'");
    } else if (r.latency_ms.has_value() && r.throughput_gops.has_value()) {
      const double implied =
          throughput_from_latency(*r.latency_ms, it->second, r.parallelism_kind,
                                  r.parallelism_n);
      const double deviation = std::abs(implied - *r.throughput_gops) / *r.throughput_gops;
      if (deviation > ops_tolerance) {
        std::ostringstream msg;
        msg.precision(2);
        msg << std::fixed << "latency implies " << implied << " GOP/s but record claims "
            << *r.throughput_gops << " (" << deviation * 100.0 << "% apart)";
        add(Severity::kWarn, "ops-mismatch", r, msg.str());
      }
    }
  }

  sort_findings(report.findings);
  return report;
}

SampleStats aggregate_stats(const std::vector<double>& values) {
  if (values.empty()) throw InvalidInput("cannot aggregate an empty sample");
  SampleStats s;
  s.count = values.size();
  s.min = values.front();
  s.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.variance = sq / static_cast<double>(s.count - 1);
  }
  s.stddev = std::sqrt(s.variance);
  return s;
}

std::map<std::string, SampleStats> grouped_stats(const std::vector<MeasurementRecord>& records,
                                                 std::string_view metric) {
  auto pick = [&metric](const MeasurementRecord& r) -> std::optional<double> {
    if (metric == "latency_ms") return r.latency_ms;
    if (metric == "throughput_gops") return r.throughput_gops;
    if (metric == "power_watts") return r.power_watts;
    if (metric == "top1_pct") return r.top1_pct;
    if (metric == "top5_pct") return r.top5_pct;
    throw InvalidInput("unknown metric '" + std::string(metric) + "'");
  };

  std::map<std::string, std::vector<double>> groups;
  for (const MeasurementRecord& r : records) {
    auto v = pick(r);
    if (!v.has_value()) continue;
    std::ostringstream key;
    key << 'L' << r.level << '/' << r.platform << '/' << r.mode << '/' << r.datatype << '/'
        << r.model << '/' << to_string(r.scope) << '/' << to_string(r.parallelism_kind) << '='
        << r.parallelism_n;
    groups[key.str()].push_back(*v);
  }

  std::map<std::string, SampleStats> out;
  for (const auto& [key, values] : groups) out.emplace(key, aggregate_stats(values));
  return out;
}

}  // namespace qutibench
