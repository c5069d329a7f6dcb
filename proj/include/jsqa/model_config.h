// jsqa/model_config.h

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

#ifndef JSQA_MODEL_CONFIG_H_
#define JSQA_MODEL_CONFIG_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jsqa {

constexpr int kEncoderLayers = 16;
constexpr int kEncoderKernel = 15;

// 16-layer 1-D CNN over the raw waveform: conv / batch-norm / leaky ReLU per
// layer, then global average pooling into an embedding of channels.back()
// dimensions. The channel count changes only at every fourth layer.
struct EncoderConfig {
  std::array<int, kEncoderLayers> channels{};
  std::array<int, kEncoderLayers> strides{};
  double leaky_slope = 0.2;
  int embedding_dim = 512;

  int half_dim() const { return embedding_dim / 2; }
  // Smallest input length the encoder accepts.
  int64_t receptive_field() const;
  int64_t total_stride() const;
  void validate() const;
};

// Two linear layers after the half embedding, each halving the dimension;
// leaky ReLU and dropout on the first.
struct ProjectionConfig {
  bool enabled = true;
  int input_dim = 256;
  int layer1_dim = 128;
  int layer2_dim = 64;
  double dropout_rate = 0.2;
  double leaky_slope = 0.2;

  void validate(const EncoderConfig& encoder) const;
};

// Four fully-connected layers from the full embedding down to one scalar,
// leaky ReLU between them, scaled sigmoid 1 + 4*sigma(x) on the output.
struct RegressorConfig {
  int input_dim = 512;
  std::array<int, 3> hidden_dims{256, 128, 64};
  double leaky_slope = 0.2;

  void validate(const EncoderConfig& encoder) const;
};

struct LossConfig {
  double temperature = 1.0;
  int batch_pairs = 8;

  void validate() const;
};

struct ModelConfig {
  EncoderConfig encoder;
  ProjectionConfig projection;
  RegressorConfig regressor;
  LossConfig loss;

  void validate() const;

  // Flat key=value block, one pair per line; round-trips exactly.
  std::string to_text() const;
  static ModelConfig from_text(const std::string& text);
};

// Named presets:
//   default - 64/128/256/512 channel blocks, 512-dim embedding
//   start16 - 16/32/64/128 blocks; the narrow-start schedule, kept for
//             comparison (its embedding is 128-dim, not 512)
//   toy     - 8/16/32/64 blocks, for fast CPU runs
//   tiny    - 4/8/16/32 blocks, for tests
ModelConfig model_config_from_preset(const std::string& preset);
std::vector<std::string> model_preset_names();

}  // namespace jsqa

#endif  // JSQA_MODEL_CONFIG_H_
