// jsqa/pretrain.cc

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

#include "jsqa/pretrain.h"

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
// Stream tags for derived seeds.
constexpr uint64_t kShuffleStream = 0x50E1;
constexpr uint64_t kDropoutStream = 0xD801;
}  // namespace

void PretrainConfig::validate() const {
  if (batch_pairs < 2) {
    throw UsageError("pretrain: batch_pairs must be >= 2 (the loss needs "
                     "cross-pair negatives)");
  }
  if (learning_rate <= 0.0) throw UsageError("pretrain: learning rate must be positive");
  if (epochs < 1 && max_steps <= 0) {
    throw UsageError("pretrain: need epochs >= 1 or a step cap");
  }
  if (crop_len <= 0) throw UsageError("pretrain: crop_len must be positive");
}

std::string PretrainConfig::to_text() const {
  std::ostringstream out;
  out << "stage=pretrain\n";
  out << "batch_pairs=" << batch_pairs << "\n";
  out << "learning_rate=" << format_double(learning_rate) << "\n";
  out << "epochs=" << epochs << "\n";
  out << "max_steps=" << max_steps << "\n";
  out << "projection_enabled=" << (projection_enabled ? 1 : 0) << "\n";
  out << "seed=" << format_int(static_cast<int64_t>(seed)) << "\n";
  out << "crop_len=" << crop_len << "\n";
  out << "model_preset=" << model_preset << "\n";
  out << "checkpoint_every_epochs=" << checkpoint_every_epochs << "\n";
  return out.str();
}

PretrainConfig PretrainConfig::from_text(const std::string& text) {
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
      throw DataError(std::string("pretrain config: missing '") + key + "'");
    }
    return it->second;
  };
  if (need("stage") != "pretrain") {
    throw DataError("pretrain config: wrong stage '" + need("stage") + "'");
  }
  PretrainConfig cfg;
  cfg.batch_pairs = static_cast<int>(parse_int(need("batch_pairs")));
  cfg.learning_rate = parse_double(need("learning_rate"));
  cfg.epochs = parse_int(need("epochs"));
  cfg.max_steps = parse_int(need("max_steps"));
  cfg.projection_enabled = parse_int(need("projection_enabled")) != 0;
  cfg.seed = static_cast<uint64_t>(parse_int(need("seed")));
  cfg.crop_len = parse_int(need("crop_len"));
  cfg.model_preset = need("model_preset");
  cfg.checkpoint_every_epochs = parse_int(need("checkpoint_every_epochs"));
  return cfg;
}

Mat realize_batch(const PairManifest& manifest, const Corpus& clean_corpus,
                  const Corpus& noise_corpus,
                  const std::vector<int64_t>& recipe_indices) {
  const int64_t len = manifest.config.crop_len;
  Mat waves(len, 2 * static_cast<Eigen::Index>(recipe_indices.size()));
  for (size_t k = 0; k < recipe_indices.size(); ++k) {
    const auto& recipe =
        manifest.recipes[static_cast<size_t>(recipe_indices[k])];
    auto [clip_a, clip_b] =
        realize_pair(recipe, clean_corpus, noise_corpus, len);
    waves.col(2 * static_cast<Eigen::Index>(k)) =
        Eigen::Map<const Vec>(clip_a.samples.data(), len);
    waves.col(2 * static_cast<Eigen::Index>(k) + 1) =
        Eigen::Map<const Vec>(clip_b.samples.data(), len);
  }
  return waves;
}

PretrainResult pretrain(
    const PretrainConfig& config, const PairManifest& manifest,
    const Corpus& clean_corpus, const Corpus& noise_corpus,
    const Checkpoint* resume,
    const std::function<void(const Checkpoint&, int64_t epoch)>& on_checkpoint) {
  config.validate();
  if (manifest.config.crop_len != config.crop_len) {
    throw TrainError("pretrain: crop_len " + format_int(config.crop_len) +
                     " does not match the manifest's " +
                     format_int(manifest.config.crop_len));
  }
  const int64_t pair_count =
      static_cast<int64_t>(manifest.recipes.size());
  if (pair_count < config.batch_pairs) {
    throw TrainError("pretrain: manifest holds " + format_int(pair_count) +
                     " pairs, batch needs " + format_int(config.batch_pairs));
  }
  const int64_t steps_per_epoch = pair_count / config.batch_pairs;

  ModelConfig model_config = model_config_from_preset(config.model_preset);
  model_config.projection.enabled = config.projection_enabled;
  model_config.loss.batch_pairs = config.batch_pairs;
  if (config.crop_len < model_config.encoder.receptive_field()) {
    throw TrainError("pretrain: crop_len " + format_int(config.crop_len) +
                     " is below the encoder receptive field " +
                     format_int(model_config.encoder.receptive_field()));
  }

  JsqaModel model = resume != nullptr
                        ? model_from_checkpoint(*resume)
                        : JsqaModel::init(model_config, config.seed);
  AdamOptimizer adam(config.learning_rate);
  int64_t global_step = 0;
  if (resume != nullptr) {
    const PretrainConfig stored =
        PretrainConfig::from_text(resume->train_config_text);
    if (stored.seed != config.seed ||
        stored.batch_pairs != config.batch_pairs ||
        stored.learning_rate != config.learning_rate ||
        stored.crop_len != config.crop_len ||
        stored.model_preset != config.model_preset ||
        stored.projection_enabled != config.projection_enabled) {
      throw TrainError("pretrain resume: configuration differs from the "
                       "checkpointed run");
    }
    if (!resume->has_optimizer) {
      throw TrainError("pretrain resume: checkpoint has no optimizer state");
    }
    adam.restore(resume->adam_timestep, resume->adam_slots);
    global_step = resume->global_step;
  }

  PretrainResult result;
  const auto t0 = std::chrono::steady_clock::now();
  const double tau = model.config().loss.temperature;

  std::vector<int64_t> order(static_cast<size_t>(pair_count));
  bool done = config.max_steps > 0 && global_step >= config.max_steps;
  for (int64_t epoch = global_step / steps_per_epoch;
       epoch < config.epochs && !done; ++epoch) {
    std::iota(order.begin(), order.end(), int64_t{0});
    Rng shuffle_rng(derive_seed(config.seed, kShuffleStream,
                                static_cast<uint64_t>(epoch)));
    shuffle_rng.shuffle(order.begin(), order.end());

    for (int64_t s = global_step - epoch * steps_per_epoch;
         s < steps_per_epoch; ++s) {
      std::vector<int64_t> batch(
          order.begin() + s * config.batch_pairs,
          order.begin() + (s + 1) * config.batch_pairs);
      const Mat waves =
          realize_batch(manifest, clean_corpus, noise_corpus, batch);

      Rng dropout_rng(derive_seed(config.seed, kDropoutStream,
                                  static_cast<uint64_t>(global_step)));
      JsqaModel::ContrastiveCache cache;
      const Mat z =
          model.contrastive_forward(waves, /*train=*/true, &dropout_rng, &cache);
      Mat d_z;
      const double loss = nt_xent_loss(z, tau, &d_z);
      model.zero_grad();
      model.contrastive_backward(cache, d_z);
      adam.step(model);

      ++global_step;
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      result.curve.append(global_step, epoch, loss, seconds);
      if (config.max_steps > 0 && global_step >= config.max_steps) {
        done = true;
        break;
      }
    }
    if (on_checkpoint && config.checkpoint_every_epochs > 0 && !done &&
        (epoch + 1) % config.checkpoint_every_epochs == 0) {
      on_checkpoint(make_checkpoint(model, &adam, epoch + 1, global_step,
                                    config.seed, config.to_text()),
                    epoch);
    }
  }

  result.final_checkpoint =
      make_checkpoint(model, &adam, global_step / steps_per_epoch, global_step,
                      config.seed, config.to_text());
  return result;
}

}  // namespace jsqa
