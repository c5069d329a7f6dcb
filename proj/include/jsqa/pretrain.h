// jsqa/pretrain.h

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

#ifndef JSQA_PRETRAIN_H_
#define JSQA_PRETRAIN_H_

#include <functional>
#include <string>

#include "jsqa/checkpoint.h"
#include "jsqa/curve_log.h"
#include "jsqa/manifest.h"
#include "jsqa/model.h"

namespace jsqa {

// Contrastive pretraining over a pair manifest. Each step draws
// batch_pairs recipes and arranges their 2 x batch_pairs clips so the loss
// treats columns (2k, 2k+1) as the positive pair. All randomness is a pure
// function of (seed, epoch, step): epoch shuffles and per-step dropout use
// derived seeds, so resuming from a checkpoint continues the exact run.
struct PretrainConfig {
  int batch_pairs = 8;
  double learning_rate = 1e-3;
  int64_t epochs = 45;
  int64_t max_steps = 0;  // 0 = no cap; otherwise stop at this global step
  bool projection_enabled = true;
  uint64_t seed = 0;
  int64_t crop_len = 2 * kModelSampleRate;  // must match the manifest
  std::string model_preset = "default";
  int64_t checkpoint_every_epochs = 0;  // 0 = final checkpoint only

  void validate() const;
  std::string to_text() const;
  static PretrainConfig from_text(const std::string& text);
};

struct PretrainResult {
  Checkpoint final_checkpoint;
  CurveLog curve;
};

// Waveform batch for the given recipe indices: crop_len x (2 * n) matrix,
// pair k in columns 2k and 2k+1. Exposed so tests can check pair adjacency.
Mat realize_batch(const PairManifest& manifest, const Corpus& clean_corpus,
                  const Corpus& noise_corpus,
                  const std::vector<int64_t>& recipe_indices);

// Runs (or resumes, when `resume` is non-null) pretraining. on_checkpoint,
// when set, receives a checkpoint at every cadence boundary.
PretrainResult pretrain(
    const PretrainConfig& config, const PairManifest& manifest,
    const Corpus& clean_corpus, const Corpus& noise_corpus,
    const Checkpoint* resume = nullptr,
    const std::function<void(const Checkpoint&, int64_t epoch)>& on_checkpoint =
        nullptr);

}  // namespace jsqa

#endif  // JSQA_PRETRAIN_H_
