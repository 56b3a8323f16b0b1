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

#include "qutibench/topology.hpp"

#include <optional>
#include <sstream>
#include <unordered_set>

#include "qutibench/csv.hpp"
#include "qutibench/error.hpp"

namespace qutibench {

namespace {

constexpr std::string_view kHeader =
    "name,kind,out_h,out_w,in_ch,kernel_h,kernel_w,stride,out_ch,seq_len,hidden,bidir";

std::optional<LayerKind> kind_from_string(std::string_view s) {
  if (s == "conv") return LayerKind::kConv;
  if (s == "fc") return LayerKind::kFullyConnected;
  if (s == "pool") return LayerKind::kPool;
  if (s == "batchnorm") return LayerKind::kBatchNorm;
  if (s == "activation") return LayerKind::kActivation;
  if (s == "eltwise_add") return LayerKind::kEltwiseAdd;
  if (s == "lstm") return LayerKind::kLstm;
  return std::nullopt;
}

std::int64_t require_positive(std::optional<std::int64_t> v, int line, std::string_view what) {
  if (!v.has_value()) {
    throw ParseError(line, "missing required field " + std::string(what));
  }
  if (*v <= 0) {
    throw ParseError(line, "field " + std::string(what) + " must be positive, got " +
                               std::to_string(*v));
  }
  return *v;
}

void forbid(std::optional<std::int64_t> v, int line, std::string_view what,
            std::string_view kind) {
  if (v.has_value()) {
    throw ParseError(line, "field " + std::string(what) + " is not applicable to kind " +
                               std::string(kind));
  }
}

// out_h/out_w default to 1 for kinds without a spatial extent; an explicit 1
// is also accepted.
std::int64_t dim_or_one(std::optional<std::int64_t> v, int line, std::string_view what) {
  if (!v.has_value()) return 1;
  if (*v != 1) {
    throw ParseError(line, "field " + std::string(what) + " must be empty or 1 for this kind");
  }
  return 1;
}

}  // namespace

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::kConv: return "conv";
    case LayerKind::kFullyConnected: return "fc";
    case LayerKind::kPool: return "pool";
    case LayerKind::kBatchNorm: return "batchnorm";
    case LayerKind::kActivation: return "activation";
    case LayerKind::kEltwiseAdd: return "eltwise_add";
    case LayerKind::kLstm: return "lstm";
  }
  return "?";
}

NetworkModel parse_topology(std::string_view text, std::string_view model_name) {
  NetworkModel model;
  model.name = model_name;

  std::unordered_set<std::string> seen_names;
  bool header_seen = false;

  const auto lines = csv::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;

    auto fields = csv::split_line(line);
    if (!header_seen) {
      if (fields.empty() || fields[0] != "name") {
        throw ParseError(lineno, "expected header starting with 'name'");
      }
      header_seen = true;
      continue;
    }

    if (fields.size() < 9 || fields.size() > 12) {
      throw ParseError(lineno, "expected 9-12 fields, got " + std::to_string(fields.size()));
    }
    fields.resize(12);  // pad optional recurrent columns

    LayerSpec layer;
    layer.name = fields[0];
    if (layer.name.empty()) throw ParseError(lineno, "empty layer name");
    if (!seen_names.insert(layer.name).second) {
      throw ParseError(lineno, "duplicate layer name '" + layer.name + "'");
    }

    auto kind = kind_from_string(fields[1]);
    if (!kind.has_value()) {
      throw ParseError(lineno, "unknown layer kind '" + fields[1] + "'");
    }
    layer.kind = *kind;
    const std::string_view kind_name = to_string(layer.kind);

    auto out_h = csv::parse_int(fields[2], lineno, "out_h");
    auto out_w = csv::parse_int(fields[3], lineno, "out_w");
    auto in_ch = csv::parse_int(fields[4], lineno, "in_ch");
    auto kernel_h = csv::parse_int(fields[5], lineno, "kernel_h");
    auto kernel_w = csv::parse_int(fields[6], lineno, "kernel_w");
    auto stride = csv::parse_int(fields[7], lineno, "stride");
    auto out_ch = csv::parse_int(fields[8], lineno, "out_ch");
    auto seq_len = csv::parse_int(fields[9], lineno, "seq_len");
    auto hidden = csv::parse_int(fields[10], lineno, "hidden");
    auto bidir = csv::parse_int(fields[11], lineno, "bidir");

    if (layer.kind != LayerKind::kLstm) {
      forbid(seq_len, lineno, "seq_len", kind_name);
      forbid(hidden, lineno, "hidden", kind_name);
      forbid(bidir, lineno, "bidir", kind_name);
    }

    switch (layer.kind) {
      case LayerKind::kConv:
        layer.out_h = require_positive(out_h, lineno, "out_h");
        layer.out_w = require_positive(out_w, lineno, "out_w");
        layer.in_ch = require_positive(in_ch, lineno, "in_ch");
        layer.kernel_h = require_positive(kernel_h, lineno, "kernel_h");
        layer.kernel_w = require_positive(kernel_w, lineno, "kernel_w");
        layer.out_ch = require_positive(out_ch, lineno, "out_ch");
        layer.stride = stride.has_value() ? require_positive(stride, lineno, "stride") : 1;
        break;
      case LayerKind::kFullyConnected:
        layer.out_h = dim_or_one(out_h, lineno, "out_h");
        layer.out_w = dim_or_one(out_w, lineno, "out_w");
        layer.in_ch = require_positive(in_ch, lineno, "in_ch");
        layer.out_ch = require_positive(out_ch, lineno, "out_ch");
        forbid(kernel_h, lineno, "kernel_h", kind_name);
        forbid(kernel_w, lineno, "kernel_w", kind_name);
        forbid(stride, lineno, "stride", kind_name);
        break;
      case LayerKind::kPool:
        layer.out_h = require_positive(out_h, lineno, "out_h");
        layer.out_w = require_positive(out_w, lineno, "out_w");
        layer.kernel_h = require_positive(kernel_h, lineno, "kernel_h");
        layer.kernel_w = require_positive(kernel_w, lineno, "kernel_w");
        layer.out_ch = require_positive(out_ch, lineno, "out_ch");
        layer.stride = stride.has_value() ? require_positive(stride, lineno, "stride") : 1;
        if (in_ch.has_value()) layer.in_ch = require_positive(in_ch, lineno, "in_ch");
        break;
      case LayerKind::kBatchNorm:
      case LayerKind::kActivation:
      case LayerKind::kEltwiseAdd:
        layer.out_h = require_positive(out_h, lineno, "out_h");
        layer.out_w = require_positive(out_w, lineno, "out_w");
        layer.out_ch = require_positive(out_ch, lineno, "out_ch");
        forbid(kernel_h, lineno, "kernel_h", kind_name);
        forbid(kernel_w, lineno, "kernel_w", kind_name);
        forbid(stride, lineno, "stride", kind_name);
        if (in_ch.has_value()) layer.in_ch = require_positive(in_ch, lineno, "in_ch");
        break;
      case LayerKind::kLstm:
        layer.out_h = dim_or_one(out_h, lineno, "out_h");
        layer.out_w = dim_or_one(out_w, lineno, "out_w");
        layer.in_ch = require_positive(in_ch, lineno, "in_ch");
        layer.hidden = require_positive(hidden, lineno, "hidden");
        layer.seq_len =
            seq_len.has_value() ? require_positive(seq_len, lineno, "seq_len")
                                : kDefaultSequenceLength;
        if (bidir.has_value() && *bidir != 0 && *bidir != 1) {
          throw ParseError(lineno, "field bidir must be 0 or 1");
        }
        layer.bidirectional = bidir.value_or(0) == 1;
        forbid(kernel_h, lineno, "kernel_h", kind_name);
        forbid(kernel_w, lineno, "kernel_w", kind_name);
        forbid(stride, lineno, "stride", kind_name);
        forbid(out_ch, lineno, "out_ch", kind_name);
        break;
    }

    model.layers.push_back(std::move(layer));
  }

  if (!header_seen) throw ParseError(0, "empty topology: missing header");
  return model;
}

std::string serialize_topology(const NetworkModel& model) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const LayerSpec& l : model.layers) {
    out << l.name << ',' << to_string(l.kind) << ',';
    auto dim = [&out](std::int64_t v) {
      if (v > 0) out << v;
    };
    switch (l.kind) {
      case LayerKind::kConv:
        out << l.out_h << ',' << l.out_w << ',' << l.in_ch << ',' << l.kernel_h << ','
            << l.kernel_w << ',' << l.stride << ',' << l.out_ch << ",,,";
        break;
      case LayerKind::kFullyConnected:
        out << ",,";
        dim(l.in_ch);
        out << ",,,,";
        dim(l.out_ch);
        out << ",,,";
        break;
      case LayerKind::kPool:
        out << l.out_h << ',' << l.out_w << ',';
        dim(l.in_ch);
        out << ',' << l.kernel_h << ',' << l.kernel_w << ',' << l.stride << ',' << l.out_ch
            << ",,,";
        break;
      case LayerKind::kBatchNorm:
      case LayerKind::kActivation:
      case LayerKind::kEltwiseAdd:
        out << l.out_h << ',' << l.out_w << ',';
        dim(l.in_ch);
        out << ",,,," << l.out_ch << ",,,";
        break;
      case LayerKind::kLstm:
        out << ",,";
        dim(l.in_ch);
        out << ",,,,," << l.seq_len << ',' << l.hidden << ',' << (l.bidirectional ? 1 : 0);
        break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qutibench
