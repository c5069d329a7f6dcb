// jsqa/finetune.cc

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

#include "jsqa/finetune.h"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "jsqa/adam.h"
#include "jsqa/errors.h"
#include "jsqa/losses.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {
constexpr uint64_t kShuffleStream = 0xF50E;
constexpr uint64_t kCropStream = 0xF0C8;
}  // namespace

void FinetuneConfig::validate() const {
  if (batch_size < 1) throw UsageError("finetune: batch_size must be >= 1");
  if (learning_rate <= 0.0) {
    throw UsageError("finetune: learning rate must be positive");
  }
  if (epochs < 1 && max_steps <= 0) {
    throw UsageError("finetune: need epochs >= 1 or a step cap");
  }
  if (crop_len <= 0) throw UsageError("finetune: crop_len must be positive");
}

std::string FinetuneConfig::to_text() const {
  std::ostringstream out;
  out << "stage=finetune\n";
  out << "batch_size=" << batch_size << "\n";
  out << "learning_rate=" << format_double(learning_rate) << "\n";
  out << "epochs=" << epochs << "\n";
  out << "max_steps=" << max_steps << "\n";
  out << "freeze_encoder=" << (freeze_encoder ? 1 : 0) << "\n";
  out << "seed=" << format_int(static_cast<int64_t>(seed)) << "\n";
  out << "crop_len=" << crop_len << "\n";
  out << "target_train_mae=" << format_double(target_train_mae) << "\n";
  return out.str();
}

FinetuneConfig FinetuneConfig::from_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw DataError(std::string("finetune config: missing '") + key + "'");
    }
    return it->second;
  };
  if (need("stage") != "finetune") {
    throw DataError("finetune config: wrong stage '" + need("stage") + "'");
  }
  FinetuneConfig cfg;
  cfg.batch_size = static_cast<int>(parse_int(need("batch_size")));
  cfg.learning_rate = parse_double(need("learning_rate"));
  cfg.epochs = parse_int(need("epochs"));
  cfg.max_steps = parse_int(need("max_steps"));
  cfg.freeze_encoder = parse_int(need("freeze_encoder")) != 0;
  cfg.seed = static_cast<uint64_t>(parse_int(need("seed")));
  cfg.crop_len = parse_int(need("crop_len"));
  cfg.target_train_mae = parse_double(need("target_train_mae"));
  return cfg;
}

FinetuneResult finetune(const FinetuneConfig& config,
                        const Checkpoint& pretrained,
                        const MosDataset& dataset) {
  config.validate();
  if (dataset.size() == 0) throw DataError("finetune: empty dataset");

  JsqaModel model = model_from_checkpoint(pretrained);
  if (config.crop_len < model.config().encoder.receptive_field()) {
    throw TrainError("finetune: crop_len " + format_int(config.crop_len) +
                     " is below the encoder receptive field " +
                     format_int(model.config().encoder.receptive_field()));
  }

  AdamOptimizer adam(config.learning_rate);
  const std::vector<std::string> frozen_prefixes =
      config.freeze_encoder ? std::vector<std::string>{"encoder/"}
                            : std::vector<std::string>{};

  const int64_t n = static_cast<int64_t>(dataset.size());
  const int64_t steps_per_epoch =
      (n + config.batch_size - 1) / config.batch_size;

  FinetuneResult result;
  const auto t0 = std::chrono::steady_clock::now();
  int64_t global_step = 0;
  bool done = false;

  std::vector<int64_t> order(static_cast<size_t>(n));
  double epoch_abs_err = 0.0;
  int64_t epoch_count = 0;
  int64_t final_epoch = 0;
  for (int64_t epoch = 0; epoch < config.epochs && !done; ++epoch) {
    std::iota(order.begin(), order.end(), int64_t{0});
    Rng shuffle_rng(derive_seed(config.seed, kShuffleStream,
                                static_cast<uint64_t>(epoch)));
    shuffle_rng.shuffle(order.begin(), order.end());

    epoch_abs_err = 0.0;
    epoch_count = 0;
    final_epoch = epoch;
    for (int64_t s = 0; s < steps_per_epoch && !done; ++s) {
      const int64_t begin = s * config.batch_size;
      const int64_t end = std::min<int64_t>(begin + config.batch_size, n);
      const int64_t batch = end - begin;

      Rng crop_rng(derive_seed(config.seed, kCropStream,
                               static_cast<uint64_t>(global_step)));
      Mat waves(config.crop_len, batch);
      Vec targets(batch);
      for (int64_t b = 0; b < batch; ++b) {
        const auto idx = static_cast<size_t>(order[static_cast<size_t>(begin + b)]);
        const AudioClip cropped =
            crop_or_pad(dataset.clip(idx), config.crop_len,
                        CropPolicy::kRandomCrop, crop_rng);
        waves.col(b) =
            Eigen::Map<const Vec>(cropped.samples.data(), config.crop_len);
        targets[b] = dataset.label(idx);
      }

      JsqaModel::ScoreCache cache;
      const Vec scores =
          model.score_forward(waves, /*train=*/!config.freeze_encoder, &cache);
      Vec d_scores;
      const double loss = mse_loss(scores, targets, &d_scores);
      model.zero_grad();
      model.score_backward(cache, d_scores, !config.freeze_encoder);
      adam.step(model, frozen_prefixes);

      const double batch_abs_err = (scores - targets).cwiseAbs().sum();
      epoch_abs_err += batch_abs_err;
      epoch_count += batch;

      ++global_step;
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      result.curve.append(global_step, epoch, loss, seconds);

      const double batch_mae = batch_abs_err / static_cast<double>(batch);
      if (config.target_train_mae > 0.0 &&
          batch_mae < config.target_train_mae) {
        result.reached_target = true;
        done = true;
      }
      if (config.max_steps > 0 && global_step >= config.max_steps) {
        done = true;
      }
    }
  }

  result.final_train_mae =
      epoch_count > 0 ? epoch_abs_err / static_cast<double>(epoch_count) : 0.0;
  result.checkpoint = make_checkpoint(model, &adam, final_epoch + 1,
                                      global_step, config.seed,
                                      config.to_text());
  return result;
}

}  // namespace jsqa
