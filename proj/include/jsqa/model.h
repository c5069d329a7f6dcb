// jsqa/model.h

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

#ifndef JSQA_MODEL_H_
#define JSQA_MODEL_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jsqa/losses.h"
#include "jsqa/model_config.h"
#include "jsqa/nn.h"

namespace jsqa {

struct EncoderCache {
  // inputs[l] feeds conv l; inputs[num_layers] is the pooled map's source.
  std::vector<FeatureMap> inputs;
  std::vector<FeatureMap> conv_out;  // pre-norm activations
  std::vector<BatchNorm1d::Cache> bn;
};

// Raw-waveform encoder: conv / batch-norm / leaky ReLU blocks, global
// average pooling into an embedding_dim vector per clip.
class Encoder {
 public:
  explicit Encoder(const EncoderConfig& config);

  // waves: len x batch, one clip per column, 16 kHz mono. Returns
  // embedding_dim x batch. Train mode uses batch statistics; eval mode makes
  // each column independent of the rest of the batch. The input must be at
  // least receptive_field() samples long.
  Mat forward(const Mat& waves, bool train, EncoderCache* cache);

  // Training-mode gradient; accumulates into the layers' grad buffers.
  void backward(const Mat& d_embeddings, const EncoderCache& cache);

  void zero_grad();

  const EncoderConfig& config() const { return config_; }
  std::vector<Conv1d>& convs() { return convs_; }
  std::vector<BatchNorm1d>& norms() { return norms_; }

 private:
  EncoderConfig config_;
  std::vector<Conv1d> convs_;
  std::vector<BatchNorm1d> norms_;
};

// First half of each embedding column.
Mat half_embedding(const Mat& embeddings);

// Two-layer head mapping the half embedding into the contrastive space.
class Projection {
 public:
  explicit Projection(const ProjectionConfig& config);

  struct Cache {
    Mat input;
    Mat post_act;  // after leaky ReLU, before dropout
    Mat drop_mask; // empty when dropout was inactive
  };

  // h: input_dim x batch. Dropout draws from rng in train mode (rng may be
  // null when dropout_rate is 0 or in eval mode).
  Mat forward(const Mat& h, bool train, Rng* rng, Cache* cache);
  Mat backward(const Cache& cache, const Mat& d_output);

  void zero_grad();
  const ProjectionConfig& config() const { return config_; }
  Linear& layer1() { return layer1_; }
  Linear& layer2() { return layer2_; }

 private:
  ProjectionConfig config_;
  Linear layer1_;
  Linear layer2_;
};

// Four dense layers from the full embedding to one score in (1, 5).
class Regressor {
 public:
  explicit Regressor(const RegressorConfig& config);

  struct Cache {
    Mat input;
    Mat act1, act2, act3;  // post-activation outputs of the hidden layers
    Vec pre_out;           // final pre-activation
  };

  Vec forward(const Mat& embeddings, Cache* cache) const;
  Mat backward(const Cache& cache, const Vec& d_scores);

  void zero_grad();
  const RegressorConfig& config() const { return config_; }
  std::vector<Linear>& layers() { return layers_; }

 private:
  RegressorConfig config_;
  std::vector<Linear> layers_;  // 4 of them
};

struct TensorRef {
  std::string name;
  double* data = nullptr;
  double* grad = nullptr;  // null for non-learnable state
  size_t size = 0;
  bool learnable = false;
};

// The full two-stage model. The regressor always exists (deterministically
// initialized with everything else); pretraining simply does not touch it.
class JsqaModel {
 public:
  explicit JsqaModel(const ModelConfig& config);

  // Deterministic init: conv/linear weights fan-in uniform, biases zero,
  // batch-norm scale 1 / shift 0. Draw order is fixed: encoder layers front
  // to back, projection, regressor.
  static JsqaModel init(const ModelConfig& config, uint64_t seed);

  const ModelConfig& config() const { return config_; }
  Encoder& encoder() { return encoder_; }
  Projection* projection() {
    return projection_.has_value() ? &*projection_ : nullptr;
  }
  Regressor& regressor() { return regressor_; }

  // Contrastive vectors for a batch of waveforms: half embedding, passed
  // through the projection head when enabled.
  struct ContrastiveCache {
    EncoderCache encoder;
    Mat embeddings;
    Projection::Cache projection;
  };
  Mat contrastive_forward(const Mat& waves, bool train, Rng* dropout_rng,
                          ContrastiveCache* cache);
  void contrastive_backward(const ContrastiveCache& cache, const Mat& d_z);

  // MOS scores for a batch of waveforms.
  struct ScoreCache {
    EncoderCache encoder;
    Regressor::Cache regressor;
  };
  Vec score_forward(const Mat& waves, bool train, ScoreCache* cache);
  // d_scores -> parameter grads; update_encoder=false leaves the encoder
  // untouched (used with frozen fine-tuning, where forward ran in eval mode).
  void score_backward(const ScoreCache& cache, const Vec& d_scores,
                      bool update_encoder);

  void zero_grad();

  // Visits every tensor in a fixed order; learnable ones carry a grad
  // pointer, batch-norm running statistics do not.
  void visit_tensors(const std::function<void(const TensorRef&)>& fn);
  int64_t count_parameters();

 private:
  ModelConfig config_;
  Encoder encoder_;
  std::optional<Projection> projection_;
  Regressor regressor_;
};

}  // namespace jsqa

#endif  // JSQA_MODEL_H_
