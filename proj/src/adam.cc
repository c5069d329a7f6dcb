// jsqa/adam.cc

// Copyright 2026  JSQA Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "jsqa/adam.h"

#include <cmath>

#include "jsqa/errors.h"

namespace jsqa {

AdamOptimizer::Slot& AdamOptimizer::slot_for(const std::string& name,
                                             size_t size) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    Slot& slot = slots_[it->second].second;
    if (slot.m.size() != size) {
      throw TrainError("adam: tensor '" + name + "' changed size");
    }
    return slot;
  }
  index_[name] = slots_.size();
  slots_.emplace_back(name, Slot{std::vector<double>(size, 0.0),
                                 std::vector<double>(size, 0.0)});
  return slots_.back().second;
}

void AdamOptimizer::step(JsqaModel& model,
                         const std::vector<std::string>& skip_prefixes) {
  ++t_;
  const double bias1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bias2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  model.visit_tensors([&](const TensorRef& tensor) {
    if (!tensor.learnable) return;
    for (const auto& prefix : skip_prefixes) {
      if (tensor.name.rfind(prefix, 0) == 0) return;
    }
    Slot& slot = slot_for(tensor.name, tensor.size);
    for (size_t i = 0; i < tensor.size; ++i) {
      const double g = tensor.grad[i];
      slot.m[i] = beta1_ * slot.m[i] + (1.0 - beta1_) * g;
      slot.v[i] = beta2_ * slot.v[i] + (1.0 - beta2_) * g * g;
      const double m_hat = slot.m[i] / bias1;
      const double v_hat = slot.v[i] / bias2;
      tensor.data[i] -= lr_ * m_hat / (std::sqrt(v_hat) + eps_);
    }
  });
}

void AdamOptimizer::restore(int64_t timestep,
                            std::vector<std::pair<std::string, Slot>> slots) {
  t_ = timestep;
  slots_ = std::move(slots);
  index_.clear();
  for (size_t i = 0; i < slots_.size(); ++i) {
    index_[slots_[i].first] = i;
  }
}

}  // namespace jsqa
