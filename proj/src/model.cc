// jsqa/model.cc

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

#include "jsqa/model.h"

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

// ---------------------------------------------------------------------------
// Encoder

Encoder::Encoder(const EncoderConfig& config) : config_(config) {
  config_.validate();
  int in_ch = 1;
  for (int l = 0; l < kEncoderLayers; ++l) {
    convs_.emplace_back(in_ch, config_.channels[l], kEncoderKernel,
                        config_.strides[l]);
    norms_.emplace_back(config_.channels[l]);
    in_ch = config_.channels[l];
  }
}

Mat Encoder::forward(const Mat& waves, bool train, EncoderCache* cache) {
  const auto len = waves.rows();
  const auto batch = waves.cols();
  if (batch < 1) throw TrainError("encoder: empty batch");
  if (len < config_.receptive_field()) {
    throw DataError("encoder: input of " + format_int(len) +
                    " samples is shorter than the receptive field (" +
                    format_int(config_.receptive_field()) + ")");
  }

  FeatureMap map;
  map.batch = static_cast<int>(batch);
  map.len = static_cast<int>(len);
  map.data.resize(1, waves.size());
  for (Eigen::Index b = 0; b < batch; ++b) {
    map.data.middleCols(b * len, len) = waves.col(b).transpose();
  }

  if (cache != nullptr) {
    cache->inputs.clear();
    cache->conv_out.clear();
    cache->bn.assign(static_cast<size_t>(kEncoderLayers), {});
  }
  for (size_t l = 0; l < static_cast<size_t>(kEncoderLayers); ++l) {
    if (cache != nullptr) cache->inputs.push_back(map);
    FeatureMap conv_out = convs_[l].forward(map);
    FeatureMap normed = norms_[l].forward(
        conv_out, train, cache != nullptr ? &cache->bn[l] : nullptr);
    if (cache != nullptr) cache->conv_out.push_back(std::move(conv_out));
    leaky_relu_inplace(normed.data, config_.leaky_slope);
    map = std::move(normed);
  }
  if (cache != nullptr) cache->inputs.push_back(map);
  return global_avg_pool(map);
}

void Encoder::backward(const Mat& d_embeddings, const EncoderCache& cache) {
  if (cache.inputs.size() != static_cast<size_t>(kEncoderLayers) + 1) {
    throw TrainError("encoder backward: cache missing (forward ran without one?)");
  }
  const FeatureMap& final_map = cache.inputs.back();
  FeatureMap d_map =
      global_avg_pool_backward(d_embeddings, final_map.batch, final_map.len);
  for (int l = kEncoderLayers - 1; l >= 0; --l) {
    // through leaky ReLU: mask from the activation output
    leaky_relu_backward_inplace(cache.inputs[static_cast<size_t>(l) + 1].data,
                                config_.leaky_slope, d_map.data);
    d_map = norms_[static_cast<size_t>(l)].backward(
        cache.conv_out[static_cast<size_t>(l)],
        cache.bn[static_cast<size_t>(l)], d_map);
    d_map = convs_[static_cast<size_t>(l)].backward(
        cache.inputs[static_cast<size_t>(l)], d_map);
  }
}

void Encoder::zero_grad() {
  for (auto& c : convs_) c.zero_grad();
  for (auto& n : norms_) n.zero_grad();
}

// ---------------------------------------------------------------------------
// Half embedding

Mat half_embedding(const Mat& embeddings) {
  if (embeddings.rows() % 2 != 0) {
    throw TrainError("half_embedding: odd embedding dimension");
  }
  return embeddings.topRows(embeddings.rows() / 2);
}

// ---------------------------------------------------------------------------
// Projection

Projection::Projection(const ProjectionConfig& config)
    : config_(config),
      layer1_(config.input_dim, config.layer1_dim),
      layer2_(config.layer1_dim, config.layer2_dim) {}

Mat Projection::forward(const Mat& h, bool train, Rng* rng, Cache* cache) {
  if (!config_.enabled) {
    throw TrainError("projection head invoked but disabled in config");
  }
  if (h.rows() != config_.input_dim) {
    throw TrainError("projection: expected " + format_int(config_.input_dim) +
                     " input dims, got " + format_int(h.rows()));
  }
  Mat act = layer1_.forward(h);
  leaky_relu_inplace(act, config_.leaky_slope);

  Mat drop_mask;
  Mat dropped;
  const bool use_dropout = train && config_.dropout_rate > 0.0;
  if (use_dropout) {
    if (rng == nullptr) {
      throw TrainError("projection: dropout requires an rng in train mode");
    }
    const double keep = 1.0 - config_.dropout_rate;
    drop_mask.resize(act.rows(), act.cols());
    double* mp = drop_mask.data();
    for (Eigen::Index i = 0; i < drop_mask.size(); ++i) {
      mp[i] = rng->uniform() < keep ? 1.0 / keep : 0.0;
    }
    dropped = act.cwiseProduct(drop_mask);
  } else {
    dropped = act;
  }

  if (cache != nullptr) {
    cache->input = h;
    cache->post_act = std::move(act);
    cache->drop_mask = std::move(drop_mask);
  }
  return layer2_.forward(dropped);
}

Mat Projection::backward(const Cache& cache, const Mat& d_output) {
  const bool had_dropout = cache.drop_mask.size() > 0;
  const Mat dropped = had_dropout
                          ? cache.post_act.cwiseProduct(cache.drop_mask)
                          : cache.post_act;
  Mat d_dropped = layer2_.backward(dropped, d_output);
  if (had_dropout) {
    d_dropped = d_dropped.cwiseProduct(cache.drop_mask);
  }
  leaky_relu_backward_inplace(cache.post_act, config_.leaky_slope, d_dropped);
  return layer1_.backward(cache.input, d_dropped);
}

void Projection::zero_grad() {
  layer1_.zero_grad();
  layer2_.zero_grad();
}

// ---------------------------------------------------------------------------
// Regressor

Regressor::Regressor(const RegressorConfig& config) : config_(config) {
  layers_.emplace_back(config.input_dim, config.hidden_dims[0]);
  layers_.emplace_back(config.hidden_dims[0], config.hidden_dims[1]);
  layers_.emplace_back(config.hidden_dims[1], config.hidden_dims[2]);
  layers_.emplace_back(config.hidden_dims[2], 1);
}

Vec Regressor::forward(const Mat& embeddings, Cache* cache) const {
  if (embeddings.rows() != config_.input_dim) {
    throw TrainError("regressor: expected " + format_int(config_.input_dim) +
                     " input dims, got " + format_int(embeddings.rows()));
  }
  Mat act1 = layers_[0].forward(embeddings);
  leaky_relu_inplace(act1, config_.leaky_slope);
  Mat act2 = layers_[1].forward(act1);
  leaky_relu_inplace(act2, config_.leaky_slope);
  Mat act3 = layers_[2].forward(act2);
  leaky_relu_inplace(act3, config_.leaky_slope);
  const Mat pre = layers_[3].forward(act3);  // 1 x batch

  Vec scores(pre.cols());
  for (Eigen::Index b = 0; b < pre.cols(); ++b) {
    scores[b] = scaled_sigmoid(pre(0, b));
  }
  if (cache != nullptr) {
    cache->input = embeddings;
    cache->act1 = std::move(act1);
    cache->act2 = std::move(act2);
    cache->act3 = std::move(act3);
    cache->pre_out = pre.row(0).transpose();
  }
  return scores;
}

Mat Regressor::backward(const Cache& cache, const Vec& d_scores) {
  Mat d_pre(1, d_scores.size());
  for (Eigen::Index b = 0; b < d_scores.size(); ++b) {
    d_pre(0, b) = d_scores[b] * scaled_sigmoid_grad(cache.pre_out[b]);
  }
  Mat d_act3 = layers_[3].backward(cache.act3, d_pre);
  leaky_relu_backward_inplace(cache.act3, config_.leaky_slope, d_act3);
  Mat d_act2 = layers_[2].backward(cache.act2, d_act3);
  leaky_relu_backward_inplace(cache.act2, config_.leaky_slope, d_act2);
  Mat d_act1 = layers_[1].backward(cache.act1, d_act2);
  leaky_relu_backward_inplace(cache.act1, config_.leaky_slope, d_act1);
  return layers_[0].backward(cache.input, d_act1);
}

void Regressor::zero_grad() {
  for (auto& l : layers_) l.zero_grad();
}

// ---------------------------------------------------------------------------
// JsqaModel

JsqaModel::JsqaModel(const ModelConfig& config)
    : config_(config), encoder_(config.encoder), regressor_(config.regressor) {
  config_.validate();
  if (config_.projection.enabled) {
    projection_.emplace(config_.projection);
  }
}

JsqaModel JsqaModel::init(const ModelConfig& config, uint64_t seed) {
  JsqaModel model(config);
  Rng rng(derive_seed(seed, 0xACED));
  for (auto& conv : model.encoder_.convs()) {
    fan_in_uniform_init(conv.weight, conv.in_channels() * conv.kernel(), rng);
  }
  if (model.projection_.has_value()) {
    fan_in_uniform_init(model.projection_->layer1().weight,
                        model.projection_->layer1().in_dim(), rng);
    fan_in_uniform_init(model.projection_->layer2().weight,
                        model.projection_->layer2().in_dim(), rng);
  }
  for (auto& layer : model.regressor_.layers()) {
    fan_in_uniform_init(layer.weight, layer.in_dim(), rng);
  }
  return model;
}

Mat JsqaModel::contrastive_forward(const Mat& waves, bool train,
                                   Rng* dropout_rng, ContrastiveCache* cache) {
  Mat embeddings = encoder_.forward(
      waves, train, (cache != nullptr && train) ? &cache->encoder : nullptr);
  Mat half = half_embedding(embeddings);
  if (cache != nullptr) cache->embeddings = std::move(embeddings);
  if (projection_.has_value()) {
    return projection_->forward(half, train, dropout_rng,
                                cache != nullptr ? &cache->projection : nullptr);
  }
  return half;
}

void JsqaModel::contrastive_backward(const ContrastiveCache& cache,
                                     const Mat& d_z) {
  Mat d_half = projection_.has_value()
                   ? projection_->backward(cache.projection, d_z)
                   : d_z;
  // Route the half gradient into the full embedding; the unused second half
  // gets exactly zero gradient.
  Mat d_embeddings = Mat::Zero(cache.embeddings.rows(), cache.embeddings.cols());
  d_embeddings.topRows(d_half.rows()) = d_half;
  encoder_.backward(d_embeddings, cache.encoder);
}

Vec JsqaModel::score_forward(const Mat& waves, bool train, ScoreCache* cache) {
  Mat embeddings = encoder_.forward(
      waves, train, (cache != nullptr && train) ? &cache->encoder : nullptr);
  return regressor_.forward(embeddings,
                            cache != nullptr ? &cache->regressor : nullptr);
}

void JsqaModel::score_backward(const ScoreCache& cache, const Vec& d_scores,
                               bool update_encoder) {
  Mat d_embeddings = regressor_.backward(cache.regressor, d_scores);
  if (update_encoder) {
    encoder_.backward(d_embeddings, cache.encoder);
  }
}

void JsqaModel::zero_grad() {
  encoder_.zero_grad();
  if (projection_.has_value()) projection_->zero_grad();
  regressor_.zero_grad();
}

void JsqaModel::visit_tensors(const std::function<void(const TensorRef&)>& fn) {
  auto emit = [&](const std::string& name, Mat& m, Mat* g) {
    fn(TensorRef{name, m.data(), g != nullptr ? g->data() : nullptr,
                 static_cast<size_t>(m.size()), g != nullptr});
  };
  auto emit_vec = [&](const std::string& name, Vec& v, Vec* g) {
    fn(TensorRef{name, v.data(), g != nullptr ? g->data() : nullptr,
                 static_cast<size_t>(v.size()), g != nullptr});
  };
  for (int l = 0; l < kEncoderLayers; ++l) {
    const std::string prefix = "encoder/layer" + format_int(l);
    Conv1d& conv = encoder_.convs()[static_cast<size_t>(l)];
    BatchNorm1d& bn = encoder_.norms()[static_cast<size_t>(l)];
    emit(prefix + "/conv_w", conv.weight, &conv.grad_weight);
    emit_vec(prefix + "/conv_b", conv.bias, &conv.grad_bias);
    emit_vec(prefix + "/bn_gamma", bn.gamma, &bn.grad_gamma);
    emit_vec(prefix + "/bn_beta", bn.beta, &bn.grad_beta);
    emit_vec(prefix + "/bn_running_mean", bn.running_mean, nullptr);
    emit_vec(prefix + "/bn_running_var", bn.running_var, nullptr);
  }
  if (projection_.has_value()) {
    emit("projection/l1_w", projection_->layer1().weight,
         &projection_->layer1().grad_weight);
    emit_vec("projection/l1_b", projection_->layer1().bias,
             &projection_->layer1().grad_bias);
    emit("projection/l2_w", projection_->layer2().weight,
         &projection_->layer2().grad_weight);
    emit_vec("projection/l2_b", projection_->layer2().bias,
             &projection_->layer2().grad_bias);
  }
  for (size_t i = 0; i < regressor_.layers().size(); ++i) {
    const std::string prefix =
        "regressor/fc" + format_int(static_cast<int64_t>(i));
    Linear& layer = regressor_.layers()[i];
    emit(prefix + "_w", layer.weight, &layer.grad_weight);
    emit_vec(prefix + "_b", layer.bias, &layer.grad_bias);
  }
}

int64_t JsqaModel::count_parameters() {
  int64_t count = 0;
  visit_tensors([&](const TensorRef& t) {
    if (t.learnable) count += static_cast<int64_t>(t.size);
  });
  return count;
}

}  // namespace jsqa
