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

// qutibench: multi-tiered benchmark analysis for neural-network accelerators.
//
// Subcommands: analyze, predict, ingest, validate, stats, pareto, report.
// Exit status: 0 success, 1 validation failures, 2 usage or parse errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qutibench/catalog.hpp"
#include "qutibench/csv.hpp"
#include "qutibench/error.hpp"
#include "qutibench/measurements.hpp"
#include "qutibench/pareto.hpp"
#include "qutibench/report.hpp"
#include "qutibench/requirements.hpp"
#include "qutibench/roofline.hpp"
#include "qutibench/topology.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qutibench;

constexpr const char* kDefaultCatalog = "data/catalog/platforms.csv";
constexpr const char* kDefaultModelsDir = "data/models";

struct GlobalOptions {
  std::string config_path;
  std::string catalog_path;  // from --catalog
  std::string models_dir;    // from --models-dir
  std::string out_dir = "./out";
  bool exact = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path.string());
  out << content;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> config;
  if (path.empty()) return config;
  const auto lines = csv::split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(static_cast<int>(i) + 1, "expected key=value in config");
    }
    config[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
  }
  return config;
}

// Precedence: flag > config file > QUTIBENCH_CATALOG > built-in default.
std::string resolve_catalog_path(const GlobalOptions& opts,
                                 const std::map<std::string, std::string>& config) {
  if (!opts.catalog_path.empty()) return opts.catalog_path;
  if (auto it = config.find("catalog"); it != config.end()) return it->second;
  if (const char* env = std::getenv("QUTIBENCH_CATALOG"); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultCatalog;
}

std::string resolve_models_dir(const GlobalOptions& opts,
                               const std::map<std::string, std::string>& config) {
  if (!opts.models_dir.empty()) return opts.models_dir;
  if (auto it = config.find("models_dir"); it != config.end()) return it->second;
  return kDefaultModelsDir;
}

// Accepts either a path to a .topo file or a bare model name under the
// models directory.
NetworkModel load_model(const std::string& name, const std::string& models_dir) {
  fs::path path(name);
  if (!fs::exists(path)) path = fs::path(models_dir) / (name + ".topo");
  if (!fs::exists(path)) {
    throw InvalidInput("model not found: " + name + " (looked for " + path.string() + ")");
  }
  return parse_topology(read_file(path.string()), path.stem().string());
}

HardwareCatalog load_catalog(const GlobalOptions& opts,
                             const std::map<std::string, std::string>& config) {
  const std::string path = resolve_catalog_path(opts, config);
  return parse_catalog(read_file(path));
}

std::string fmt(double v, int decimals, bool exact) {
  if (exact) return csv::format_double(v);
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals) << v;
  return out.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string item =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<MeasurementRecord> ingest_files(const std::vector<std::string>& paths,
                                            ValidationReport& report) {
  std::vector<MeasurementRecord> records;
  for (const std::string& path : paths) {
    IngestResult result = ingest_measurements(read_file(path), path);
    records.insert(records.end(), result.records.begin(), result.records.end());
    report.findings.insert(report.findings.end(), result.report.findings.begin(),
                           result.report.findings.end());
  }
  return records;
}

bool record_matches_filter(const MeasurementRecord& r, const std::string& key,
                           const std::string& value) {
  if (key == "platform") return r.platform == value;
  if (key == "mode") return r.mode == value;
  if (key == "datatype") return r.datatype == value;
  if (key == "model") return r.model == value;
  if (key == "layer") return r.layer == value;
  if (key == "scope") return to_string(r.scope) == value;
  if (key == "parallelism_kind") return to_string(r.parallelism_kind) == value;
  if (key == "level") return std::to_string(r.level) == value;
  if (key == "parallelism_n") return std::to_string(r.parallelism_n) == value;
  throw InvalidInput("unknown filter key '" + key + "'");
}

std::vector<MeasurementRecord> apply_filters(std::vector<MeasurementRecord> records,
                                             const std::vector<std::string>& filters) {
  for (const std::string& f : filters) {
    const std::size_t eq = f.find('=');
    if (eq == std::string::npos) throw InvalidInput("filter must be key=value: " + f);
    const std::string key = f.substr(0, eq);
    const std::string value = f.substr(eq + 1);
    std::erase_if(records, [&](const MeasurementRecord& r) {
      return !record_matches_filter(r, key, value);
    });
  }
  return records;
}

std::vector<Objective> parse_objectives(const std::vector<std::string>& specs) {
  std::vector<Objective> objectives;
  for (const std::string& s : specs) {
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
      throw InvalidInput("objective must be field:max or field:min, got '" + s + "'");
    }
    Objective o;
    o.field = s.substr(0, colon);
    const std::string dir = s.substr(colon + 1);
    if (dir == "max") {
      o.direction = Direction::kMaximize;
    } else if (dir == "min") {
      o.direction = Direction::kMinimize;
    } else {
      throw InvalidInput("objective direction must be max or min, got '" + dir + "'");
    }
    objectives.push_back(std::move(o));
  }
  return objectives;
}

// Builds the "model" / "model/layer" -> ops map the consistency check uses.
std::map<std::string, std::int64_t> ops_map_for_models(const std::vector<std::string>& names,
                                                       const std::string& models_dir) {
  std::map<std::string, std::int64_t> ops;
  for (const std::string& name : names) {
    NetworkModel model = load_model(name, models_dir);
    ModelRequirements reqs = model_requirements(model);
    ops[model.name] = reqs.total_ops;
    for (std::size_t i = 0; i < model.layers.size(); ++i) {
      ops[model.name + "/" + model.layers[i].name] = reqs.per_layer[i].ops;
    }
  }
  return ops;
}

int cmd_analyze(const GlobalOptions& opts, const std::vector<std::string>& models,
                const std::string& models_dir, bool per_layer, bool training) {
  for (const std::string& name : models) {
    NetworkModel model = load_model(name, models_dir);
    ModelRequirements reqs = model_requirements(model);
    std::cout << "model: " << model.name << '\n';
    std::cout << "layers: " << model.layer_count() << '\n';
    if (opts.exact) {
      std::cout << "ops_total: " << reqs.total_ops << " OP\n";
      std::cout << "weights_total: " << reqs.total_weights << " elements\n";
      std::cout << "tensor_total: " << reqs.total_tensor << " elements\n";
    } else {
      std::cout << "ops_total: " << fmt(reqs.total_ops / 1e9, 2, false) << " GOP\n";
      std::cout << "weights_total: " << fmt(reqs.total_weights / 1e6, 2, false) << " ME\n";
      std::cout << "tensor_total: " << fmt(reqs.total_tensor / 1e6, 2, false) << " ME\n";
    }
    if (per_layer) {
      std::cout << "layer,kind,ops_mop,weights_ke,tensor_ke\n";
      for (std::size_t i = 0; i < model.layers.size(); ++i) {
        const LayerRequirements& r = reqs.per_layer[i];
        std::cout << model.layers[i].name << ',' << to_string(model.layers[i].kind) << ','
                  << fmt(r.ops / 1e6, 2, opts.exact) << ','
                  << fmt(r.weights / 1e3, 2, opts.exact) << ','
                  << fmt(r.tensor / 1e3, 2, opts.exact) << '\n';
      }
    }
    if (training) {
      TrainingRequirements t = training_requirements(reqs);
      std::cout << "training_ops_total: " << fmt(t.total_ops / 1e9, 2, opts.exact) << " GOP\n";
      std::cout << "weight_updates: " << fmt(t.weight_updates / 1e6, 2, opts.exact) << " ME\n";
      std::cout << "gradients: " << fmt(t.gradients / 1e6, 2, opts.exact) << " ME\n";
      std::cout << "tensor_buffer: " << fmt(t.tensor_buffer / 1e6, 2, opts.exact) << " ME\n";
    }
  }
  return 0;
}

int cmd_predict(const GlobalOptions& opts, const std::map<std::string, std::string>& config,
                const std::string& models_csv, const std::string& platforms_csv,
                const std::string& batches_csv, const std::string& models_dir) {
  HardwareCatalog catalog = load_catalog(opts, config);

  std::vector<const PlatformEntry*> entries;
  for (const std::string& token : split_list(platforms_csv)) {
    auto matched = catalog.match_platform(token);
    if (matched.empty()) throw InvalidInput("no catalog platform matches '" + token + "'");
    entries.insert(entries.end(), matched.begin(), matched.end());
  }

  std::vector<std::int64_t> batches;
  for (const std::string& b : split_list(batches_csv)) {
    auto v = csv::parse_int(b, 0, "batch");
    if (!v.has_value() || *v <= 0) throw InvalidInput("batch sizes must be positive");
    batches.push_back(*v);
  }

  std::cout << "model,platform,mode,datatype,batch,peak_gops,ai_ops_per_byte,"
               "attainable_gops,bound\n";
  for (const std::string& name : split_list(models_csv)) {
    NetworkModel model = load_model(name, models_dir);
    ModelRequirements reqs = model_requirements(model);
    for (const PlatformEntry* entry : entries) {
      for (const PredictionRow& row : prediction_table(reqs, batches, *entry)) {
        std::cout << model.name << ',' << entry->platform << ',' << entry->mode << ','
                  << entry->datatype.name << ',' << row.batch << ','
                  << fmt(entry->peak_tops * 1000.0, 2, opts.exact) << ','
                  << fmt(row.prediction.arithmetic_intensity, 1, opts.exact) << ','
                  << fmt(row.prediction.attainable_gops, 2, opts.exact) << ','
                  << to_string(row.prediction.bound)
                  << (row.prediction.missing_bandwidth ? " (no bandwidth figure)" : "")
                  << '\n';
      }
    }
  }
  return 0;
}

int cmd_ingest(const GlobalOptions& opts, const std::vector<std::string>& inputs) {
  ValidationReport report;
  std::vector<MeasurementRecord> records = ingest_files(inputs, report);
  write_file(fs::path(opts.out_dir) / "measurements.csv", serialize_measurements(records));
  std::cout << records.size() << " record(s) ingested from " << inputs.size() << " file(s)\n";
  std::cout << report.to_text();
  return report.has_failures() ? 1 : 0;
}

int cmd_validate(const GlobalOptions& opts, const std::map<std::string, std::string>& config,
                 const std::vector<std::string>& inputs, const std::string& models_csv,
                 const std::string& models_dir, double tolerance, bool json) {
  HardwareCatalog catalog = load_catalog(opts, config);
  ValidationReport report;
  std::vector<MeasurementRecord> records = ingest_files(inputs, report);

  auto ops = ops_map_for_models(split_list(models_csv), models_dir);
  ValidationReport consistency = consistency_check(records, catalog, ops, tolerance);
  report.findings.insert(report.findings.end(), consistency.findings.begin(),
                         consistency.findings.end());

  const std::string text = report.to_text();
  write_file(fs::path(opts.out_dir) / "validation.txt", text);
  write_file(fs::path(opts.out_dir) / "validation.json", report.to_json());
  std::cout << (json ? report.to_json() : text);
  return report.has_failures() ? 1 : 0;
}

int cmd_stats(const GlobalOptions& opts, const std::vector<std::string>& inputs,
              const std::string& metric, const std::vector<std::string>& filters) {
  ValidationReport report;
  std::vector<MeasurementRecord> records =
      apply_filters(ingest_files(inputs, report), filters);

  std::ostringstream out;
  out << "group,count,min,max,mean,variance\n";
  for (const auto& [key, s] : grouped_stats(records, metric)) {
    out << key << ',' << s.count << ',' << fmt(s.min, 2, opts.exact) << ','
        << fmt(s.max, 2, opts.exact) << ',' << fmt(s.mean, 2, opts.exact) << ','
        << fmt(s.variance, 2, opts.exact) << '\n';
  }
  std::cout << out.str();
  write_file(fs::path(opts.out_dir) / "stats.csv", out.str());
  return report.has_failures() ? 1 : 0;
}

int cmd_pareto(const GlobalOptions& opts, const std::vector<std::string>& inputs,
               const std::vector<std::string>& objective_specs,
               const std::vector<std::string>& filters) {
  ValidationReport report;
  std::vector<MeasurementRecord> records =
      apply_filters(ingest_files(inputs, report), filters);
  std::vector<Objective> objectives = parse_objectives(objective_specs);

  const std::string scatter = render_scatter_csv(records, objectives);
  write_file(fs::path(opts.out_dir) / "scatter.csv", scatter);

  // Frontier CSV = just the flagged rows of the scatter.
  std::ostringstream frontier;
  const auto lines = csv::split_lines(scatter);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == 0 || std::string_view(lines[i]).ends_with(",1")) frontier << lines[i] << '\n';
  }
  write_file(fs::path(opts.out_dir) / "frontier.csv", frontier.str());
  std::cout << frontier.str();
  return report.has_failures() ? 1 : 0;
}

int cmd_report(const GlobalOptions& opts, const std::map<std::string, std::string>& config,
               const std::vector<std::string>& inputs, const std::string& models_csv,
               const std::string& platforms_csv, const std::string& batches_csv,
               const std::string& models_dir, const std::vector<std::string>& objective_specs,
               const std::string& format_name) {
  ReportFormat format = parse_report_format(format_name);
  ReportStore store;
  store.objectives = parse_objectives(objective_specs);

  if (!models_csv.empty() && !platforms_csv.empty()) {
    HardwareCatalog catalog = load_catalog(opts, config);
    std::vector<std::int64_t> batches;
    for (const std::string& b : split_list(batches_csv)) {
      auto v = csv::parse_int(b, 0, "batch");
      if (!v.has_value() || *v <= 0) throw InvalidInput("batch sizes must be positive");
      batches.push_back(*v);
    }
    for (const std::string& name : split_list(models_csv)) {
      NetworkModel model = load_model(name, models_dir);
      ModelRequirements reqs = model_requirements(model);
      for (const std::string& token : split_list(platforms_csv)) {
        auto matched = catalog.match_platform(token);
        if (matched.empty()) throw InvalidInput("no catalog platform matches '" + token + "'");
        for (const PlatformEntry* entry : matched) {
          store.predictions.push_back({model.name, entry->platform, entry->mode,
                                       entry->datatype.name,
                                       prediction_table(reqs, batches, *entry)});
        }
      }
    }
  }

  ValidationReport report;
  store.records = ingest_files(inputs, report);

  const std::string rendered = render_report(store, format);
  const char* ext = format == ReportFormat::kText  ? "txt"
                    : format == ReportFormat::kCsv ? "csv"
                                                   : "json";
  write_file(fs::path(opts.out_dir) / (std::string("report.") + ext), rendered);
  std::cout << rendered;
  return report.has_failures() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QuTiBench analysis toolkit: neural-network requirements, roofline "
               "predictions, and benchmark result analysis"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "Key=value config file");
  app.add_option("--catalog", opts.catalog_path, "Hardware catalog CSV path");
  app.add_option("--models-dir", opts.models_dir, "Directory of .topo model files");
  app.add_option("--out", opts.out_dir, "Output directory for artifacts");
  app.add_flag("--exact", opts.exact, "Print full precision instead of rounded values");

  // analyze
  std::vector<std::string> analyze_models;
  bool per_layer = false;
  bool training = false;
  auto* analyze = app.add_subcommand("analyze", "Compute/memory requirements of topologies");
  analyze->add_option("models", analyze_models, "Topology files or model names")->required();
  analyze->add_flag("--per-layer", per_layer, "Print per-layer requirement rows");
  analyze->add_flag("--training", training, "Also print per-pass training requirements");

  // predict
  std::string predict_models, predict_platforms;
  std::string predict_batches = "1";
  auto* predict = app.add_subcommand("predict", "Roofline performance predictions");
  predict->add_option("--models", predict_models, "Comma-separated model names")->required();
  predict->add_option("--platforms", predict_platforms,
                      "Comma-separated platform name substrings")->required();
  predict->add_option("--batch", predict_batches, "Comma-separated batch sizes");

  // ingest
  std::vector<std::string> ingest_inputs;
  auto* ingest = app.add_subcommand("ingest", "Parse and merge measurement CSV files");
  ingest->add_option("files", ingest_inputs, "Measurement CSV files")->required();

  // validate
  std::vector<std::string> validate_inputs;
  std::string validate_models;
  double tolerance = 0.02;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "Consistency-check measurements");
  validate->add_option("files", validate_inputs, "Measurement CSV files")->required();
  validate->add_option("--models", validate_models,
                       "Comma-separated model names for declared op counts")->required();
  validate->add_option("--tolerance", tolerance, "Relative ops-mismatch threshold");
  validate->add_flag("--json", validate_json, "Print the report as JSON");

  // stats
  std::vector<std::string> stats_inputs, stats_filters;
  std::string metric = "latency_ms";
  auto* stats = app.add_subcommand("stats", "Grouped statistics over measurements");
  stats->add_option("files", stats_inputs, "Measurement CSV files")->required();
  stats->add_option("--metric", metric, "Record field to aggregate");
  stats->add_option("--filter", stats_filters, "key=value record filter (repeatable)");

  // pareto
  std::vector<std::string> pareto_inputs, pareto_objectives, pareto_filters;
  auto* pareto = app.add_subcommand("pareto", "Pareto frontier over measurements");
  pareto->add_option("files", pareto_inputs, "Measurement CSV files")->required();
  pareto->add_option("--objective", pareto_objectives,
                     "field:max|min objective (repeat >= 2 times)")->required();
  pareto->add_option("--filter", pareto_filters, "key=value record filter (repeatable)");

  // report
  std::vector<std::string> report_inputs, report_objectives;
  std::string report_models, report_platforms, report_format = "text";
  std::string report_batches = "1";
  auto* report = app.add_subcommand("report", "Combined multi-level summary report");
  report->add_option("files", report_inputs, "Measurement CSV files");
  report->add_option("--models", report_models, "Comma-separated model names");
  report->add_option("--platforms", report_platforms,
                     "Comma-separated platform name substrings");
  report->add_option("--batch", report_batches, "Comma-separated batch sizes");
  report->add_option("--objective", report_objectives, "field:max|min objective (repeatable)");
  report->add_option("--format", report_format, "Output format: text, csv, or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto config = read_config(opts.config_path);
    const std::string models_dir = resolve_models_dir(opts, config);
    if (*analyze) return cmd_analyze(opts, analyze_models, models_dir, per_layer, training);
    if (*predict) {
      return cmd_predict(opts, config, predict_models, predict_platforms, predict_batches,
                         models_dir);
    }
    if (*ingest) return cmd_ingest(opts, ingest_inputs);
    if (*validate) {
      return cmd_validate(opts, config, validate_inputs, validate_models, models_dir,
                          tolerance, validate_json);
    }
    if (*stats) return cmd_stats(opts, stats_inputs, metric, stats_filters);
    if (*pareto) return cmd_pareto(opts, pareto_inputs, pareto_objectives, pareto_filters);
    if (*report) {
      return cmd_report(opts, config, report_inputs, report_models, report_platforms,
                        report_batches, models_dir, report_objectives, report_format);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
