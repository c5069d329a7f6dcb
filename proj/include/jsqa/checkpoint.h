// jsqa/checkpoint.h

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

#ifndef JSQA_CHECKPOINT_H_
#define JSQA_CHECKPOINT_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jsqa/adam.h"
#include "jsqa/model.h"

namespace jsqa {

// Single-file binary container: magic 'JSQACKPT', format version, epoch /
// step / seed counters, the model config as a flat text block, an opaque
// training-config text block, every model tensor (learnable weights plus
// batch-norm running statistics) as raw little-endian doubles, optional
// optimizer state, and a trailing CRC-32 over everything before it.
// Serialization is canonical, so save -> load -> save is byte-identical.
struct Checkpoint {
  uint32_t version = 1;
  int64_t epoch = 0;
  int64_t global_step = 0;
  uint64_t seed = 0;
  std::string model_config_text;
  std::string train_config_text;
  std::vector<std::pair<std::string, std::vector<double>>> tensors;
  bool has_optimizer = false;
  int64_t adam_timestep = 0;
  std::vector<std::pair<std::string, AdamOptimizer::Slot>> adam_slots;
};

Checkpoint make_checkpoint(JsqaModel& model, const AdamOptimizer* optimizer,
                           int64_t epoch, int64_t global_step, uint64_t seed,
                           const std::string& train_config_text);

// Copies tensor values into an existing model; names and sizes must match
// the model's layout exactly.
void apply_checkpoint_to_model(const Checkpoint& checkpoint, JsqaModel& model);

// Rebuilds the model from the stored config and loads the tensors.
JsqaModel model_from_checkpoint(const Checkpoint& checkpoint);

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path);
// Throws DataError on version mismatch, truncation or checksum failure;
// nothing is partially applied.
Checkpoint load_checkpoint(const std::string& path);

}  // namespace jsqa

#endif  // JSQA_CHECKPOINT_H_
