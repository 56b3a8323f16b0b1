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

#ifndef QUTIBENCH_TOPOLOGY_HPP_
#define QUTIBENCH_TOPOLOGY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qutibench {

enum class LayerKind {
  kConv,
  kFullyConnected,
  kPool,
  kBatchNorm,
  kActivation,
  kEltwiseAdd,
  kLstm,
};

std::string_view to_string(LayerKind kind);

// Timesteps assumed for recurrent layers when the topology file leaves the
// field empty.
inline constexpr std::int64_t kDefaultSequenceLength = 3000;

// One network layer with its dimensional parameters. Which fields are
// meaningful depends on `kind`; the parser enforces the schema, so a
// LayerSpec obtained from parse_topology() is always consistent.
struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::kConv;

  std::int64_t out_h = 1;  // output spatial dims; 1 for fc/lstm
  std::int64_t out_w = 1;
  std::int64_t in_ch = 0;     // conv, fc, lstm
  std::int64_t out_ch = 0;    // all spatial kinds and fc
  std::int64_t kernel_h = 0;  // conv, pool
  std::int64_t kernel_w = 0;
  std::int64_t stride = 1;  // informational; requirements use output dims

  std::int64_t seq_len = 0;  // lstm
  std::int64_t hidden = 0;   // lstm
  bool bidirectional = false;

  bool operator==(const LayerSpec&) const = default;
};

struct NetworkModel {
  std::string name;
  std::vector<LayerSpec> layers;

  std::size_t layer_count() const { return layers.size(); }
  bool operator==(const NetworkModel&) const = default;
};

// Parses the topology file format:
//   # comment
//   name,kind,out_h,out_w,in_ch,kernel_h,kernel_w,stride,out_ch[,seq_len,hidden,bidir]
// One layer per subsequent line; fields inapplicable to the kind are left
// empty. Throws ParseError naming the offending line on unknown kinds,
// missing required fields, duplicate layer names, or non-positive dimensions.
NetworkModel parse_topology(std::string_view text, std::string_view model_name = "");

// Inverse of parse_topology modulo comments and whitespace.
std::string serialize_topology(const NetworkModel& model);

}  // namespace qutibench

#endif  // QUTIBENCH_TOPOLOGY_HPP_
