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

#ifndef QUTIBENCH_REQUIREMENTS_HPP_
#define QUTIBENCH_REQUIREMENTS_HPP_

#include <cstdint>
#include <vector>

#include "qutibench/topology.hpp"

namespace qutibench {

// Per-layer inference-time compute and memory requirements. All counts are
// exact integers: ops in single operations (one MAC = 2 ops), weights and
// tensor sizes in element counts.
struct LayerRequirements {
  std::int64_t ops = 0;      // compute, in operations
  std::int64_t weights = 0;  // parameter elements (incl. biases)
  std::int64_t tensor = 0;   // output activation elements
};

struct ModelRequirements {
  std::int64_t total_ops = 0;
  std::int64_t total_weights = 0;
  std::int64_t total_tensor = 0;
  std::vector<LayerRequirements> per_layer;
};

// Per-pass training requirements derived from the inference numbers:
// forward + backward compute, weight-update traffic, and gradient storage.
struct TrainingRequirements {
  std::int64_t total_ops = 0;       // 3 * inference ops + weight count
  std::int64_t weight_updates = 0;  // 3 * weight count
  std::int64_t gradients = 0;       // matches total tensor elements
  std::int64_t tensor_buffer = 0;   // 2 * total tensor elements
};

LayerRequirements layer_requirements(const LayerSpec& layer);
ModelRequirements model_requirements(const NetworkModel& model);
TrainingRequirements training_requirements(const ModelRequirements& reqs);

}  // namespace qutibench

#endif  // QUTIBENCH_REQUIREMENTS_HPP_
