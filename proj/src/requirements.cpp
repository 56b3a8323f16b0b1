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

#include "qutibench/requirements.hpp"

namespace qutibench {

LayerRequirements layer_requirements(const LayerSpec& l) {
  LayerRequirements r;
  const std::int64_t spatial = l.out_h * l.out_w;
  switch (l.kind) {
    case LayerKind::kConv:
      // One MAC per kernel element per output element, counted as 2 ops.
      r.ops = 2 * spatial * l.kernel_h * l.kernel_w * l.in_ch * l.out_ch;
      r.weights = l.kernel_h * l.kernel_w * l.in_ch * l.out_ch + l.out_ch;
      r.tensor = spatial * l.out_ch;
      break;
    case LayerKind::kFullyConnected:
      r.ops = 2 * l.in_ch * l.out_ch;
      r.weights = l.in_ch * l.out_ch + l.out_ch;
      r.tensor = l.out_ch;
      break;
    case LayerKind::kPool:
      // One op per kernel element per output element.
      r.ops = spatial * l.out_ch * l.kernel_h * l.kernel_w;
      r.weights = 0;
      r.tensor = spatial * l.out_ch;
      break;
    case LayerKind::kBatchNorm:
      // Scale and shift per element.
      r.ops = 2 * spatial * l.out_ch;
      r.weights = 2 * l.out_ch;
      r.tensor = spatial * l.out_ch;
      break;
    case LayerKind::kActivation:
    case LayerKind::kEltwiseAdd:
      r.ops = spatial * l.out_ch;
      r.weights = 0;
      r.tensor = spatial * l.out_ch;
      break;
    case LayerKind::kLstm: {
      // Four gates over concatenated input and state, per timestep.
      const std::int64_t gates = 4 * ((l.in_ch + l.hidden) * l.hidden + l.hidden);
      const std::int64_t dirs = l.bidirectional ? 2 : 1;
      r.ops = dirs * 2 * 4 * (l.in_ch + l.hidden) * l.hidden * l.seq_len;
      r.weights = gates;  // weights are shared across directions' timesteps
      r.tensor = dirs * l.seq_len * l.hidden;
      break;
    }
  }
  return r;
}

ModelRequirements model_requirements(const NetworkModel& model) {
  ModelRequirements total;
  total.per_layer.reserve(model.layers.size());
  for (const LayerSpec& l : model.layers) {
    LayerRequirements r = layer_requirements(l);
    total.total_ops += r.ops;
    total.total_weights += r.weights;
    total.total_tensor += r.tensor;
    total.per_layer.push_back(r);
  }
  return total;
}

TrainingRequirements training_requirements(const ModelRequirements& reqs) {
  TrainingRequirements t;
  // Forward pass plus two backward products, and one extra pass over the
  // weights for the update itself.
  t.total_ops = 3 * reqs.total_ops + reqs.total_weights;
  t.weight_updates = 3 * reqs.total_weights;
  t.gradients = reqs.total_tensor;
  t.tensor_buffer = 2 * reqs.total_tensor;
  return t;
}

}  // namespace qutibench
