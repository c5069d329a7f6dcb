// jsqa/adam.h

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

#ifndef JSQA_ADAM_H_
#define JSQA_ADAM_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jsqa/model.h"

namespace jsqa {

// Adam with the conventional moment coefficients. Moment buffers are keyed
// by tensor name, so a filtered parameter set (frozen encoder) keeps its
// state aligned.
class AdamOptimizer {
 public:
  explicit AdamOptimizer(double learning_rate, double beta1 = 0.9,
                         double beta2 = 0.999, double epsilon = 1e-8)
      : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {}

  // One update over the model's learnable tensors. Tensors whose name starts
  // with any entry of `skip_prefixes` are left untouched.
  void step(JsqaModel& model,
            const std::vector<std::string>& skip_prefixes = {});

  int64_t timestep() const { return t_; }
  double learning_rate() const { return lr_; }
  double beta1() const { return beta1_; }
  double beta2() const { return beta2_; }
  double epsilon() const { return eps_; }

  struct Slot {
    std::vector<double> m;
    std::vector<double> v;
  };
  // Serialized state; insertion order is the visit order.
  const std::vector<std::pair<std::string, Slot>>& slots() const {
    return slots_;
  }
  void restore(int64_t timestep,
               std::vector<std::pair<std::string, Slot>> slots);

 private:
  Slot& slot_for(const std::string& name, size_t size);

  double lr_;
  double beta1_;
  double beta2_;
  double eps_;
  int64_t t_ = 0;
  std::vector<std::pair<std::string, Slot>> slots_;
  std::map<std::string, size_t> index_;
};

}  // namespace jsqa

#endif  // JSQA_ADAM_H_
