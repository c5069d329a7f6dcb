// jsqa/finetune.h

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

#ifndef JSQA_FINETUNE_H_
#define JSQA_FINETUNE_H_

#include <string>

#include "jsqa/checkpoint.h"
#include "jsqa/curve_log.h"
#include "jsqa/dataset.h"
#include "jsqa/model.h"

namespace jsqa {

// MOS fine-tuning of a pretrained encoder with the bounded regression head.
// All parameters update unless freeze_encoder is set, in which case the
// encoder runs in eval mode (so even its running statistics stay
// bit-identical) and only the head trains.
struct FinetuneConfig {
  int batch_size = 8;
  double learning_rate = 1e-3;
  int64_t epochs = 250;
  int64_t max_steps = 0;  // 0 = no cap
  bool freeze_encoder = false;
  uint64_t seed = 0;
  int64_t crop_len = 2 * kModelSampleRate;
  // When positive, stop as soon as a step's batch MAE drops below this.
  double target_train_mae = 0.0;

  void validate() const;
  std::string to_text() const;
  static FinetuneConfig from_text(const std::string& text);
};

struct FinetuneResult {
  Checkpoint checkpoint;
  CurveLog curve;  // loss column is the step MSE
  // Mean absolute error across the last trained epoch's batches.
  double final_train_mae = 0.0;
  bool reached_target = false;
};

FinetuneResult finetune(const FinetuneConfig& config,
                        const Checkpoint& pretrained,
                        const MosDataset& dataset);

}  // namespace jsqa

#endif  // JSQA_FINETUNE_H_
