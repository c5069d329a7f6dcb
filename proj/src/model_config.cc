// jsqa/model_config.cc

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

#include "jsqa/model_config.h"

#include <map>
#include <sstream>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

int64_t EncoderConfig::receptive_field() const {
  int64_t rf = 1;
  int64_t jump = 1;
  for (int l = 0; l < kEncoderLayers; ++l) {
    rf += static_cast<int64_t>(kEncoderKernel - 1) * jump;
    jump *= strides[l];
  }
  return rf;
}

int64_t EncoderConfig::total_stride() const {
  int64_t s = 1;
  for (int l = 0; l < kEncoderLayers; ++l) s *= strides[l];
  return s;
}

void EncoderConfig::validate() const {
  for (int l = 0; l < kEncoderLayers; ++l) {
    if (channels[l] <= 0) throw UsageError("encoder: channel count must be positive");
    if (strides[l] < 1) throw UsageError("encoder: stride must be >= 1");
    if (l > 0 && l % 4 != 0 && channels[l] != channels[l - 1]) {
      throw UsageError("encoder: channel count may change only every 4 layers");
    }
    if (l > 0 && channels[l] < channels[l - 1]) {
      throw UsageError("encoder: channel schedule must be non-decreasing");
    }
  }
  if (channels.back() != embedding_dim) {
    throw UsageError("encoder: embedding_dim must equal the last channel count");
  }
  if (embedding_dim % 2 != 0) {
    throw UsageError("encoder: embedding_dim must be even (half is used contrastively)");
  }
  if (leaky_slope <= 0.0 || leaky_slope >= 1.0) {
    throw UsageError("encoder: leaky slope must be in (0, 1)");
  }
}

void ProjectionConfig::validate(const EncoderConfig& encoder) const {
  if (input_dim != encoder.half_dim()) {
    throw UsageError("projection: input_dim must equal half the embedding");
  }
  if (layer1_dim * 2 != input_dim || layer2_dim * 2 != layer1_dim) {
    throw UsageError("projection: each layer must halve its input dimension");
  }
  if (dropout_rate < 0.0 || dropout_rate >= 1.0) {
    throw UsageError("projection: dropout rate must be in [0, 1)");
  }
}

void RegressorConfig::validate(const EncoderConfig& encoder) const {
  if (input_dim != encoder.embedding_dim) {
    throw UsageError("regressor: input_dim must equal the embedding dimension");
  }
  for (int d : hidden_dims) {
    if (d <= 0) throw UsageError("regressor: hidden dims must be positive");
  }
}

void LossConfig::validate() const {
  if (temperature <= 0.0) throw UsageError("loss: temperature must be positive");
  if (batch_pairs < 2) {
    throw UsageError("loss: at least 2 pairs per batch (negatives required)");
  }
}

void ModelConfig::validate() const {
  encoder.validate();
  projection.validate(encoder);
  regressor.validate(encoder);
  loss.validate();
}

std::string ModelConfig::to_text() const {
  std::ostringstream out;
  out << "encoder.channels=";
  for (int l = 0; l < kEncoderLayers; ++l) {
    if (l) out << ',';
    out << encoder.channels[l];
  }
  out << "\nencoder.strides=";
  for (int l = 0; l < kEncoderLayers; ++l) {
    if (l) out << ',';
    out << encoder.strides[l];
  }
  out << "\nencoder.leaky_slope=" << format_double(encoder.leaky_slope);
  out << "\nencoder.embedding_dim=" << encoder.embedding_dim;
  out << "\nprojection.enabled=" << (projection.enabled ? 1 : 0);
  out << "\nprojection.input_dim=" << projection.input_dim;
  out << "\nprojection.layer1_dim=" << projection.layer1_dim;
  out << "\nprojection.layer2_dim=" << projection.layer2_dim;
  out << "\nprojection.dropout_rate=" << format_double(projection.dropout_rate);
  out << "\nprojection.leaky_slope=" << format_double(projection.leaky_slope);
  out << "\nregressor.input_dim=" << regressor.input_dim;
  out << "\nregressor.hidden_dims=" << regressor.hidden_dims[0] << ','
      << regressor.hidden_dims[1] << ',' << regressor.hidden_dims[2];
  out << "\nregressor.leaky_slope=" << format_double(regressor.leaky_slope);
  out << "\nloss.temperature=" << format_double(loss.temperature);
  out << "\nloss.batch_pairs=" << loss.batch_pairs;
  out << "\n";
  return out.str();
}

namespace {

std::map<std::string, std::string> parse_kv_block(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DataError("config block: malformed line '" + line + "'");
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv,
                           const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw DataError("config block: missing key '" + key + "'");
  return it->second;
}

template <size_t N>
void parse_int_list(const std::string& text, std::array<int, N>& out) {
  const auto fields = split_fields(text, ',');
  if (fields.size() != N) {
    throw DataError("config block: expected " + format_int(static_cast<int64_t>(N)) +
                    " comma-separated integers, got '" + text + "'");
  }
  for (size_t i = 0; i < N; ++i) {
    out[i] = static_cast<int>(parse_int(fields[i]));
  }
}

}  // namespace

ModelConfig ModelConfig::from_text(const std::string& text) {
  const auto kv = parse_kv_block(text);
  ModelConfig cfg;
  parse_int_list(require(kv, "encoder.channels"), cfg.encoder.channels);
  parse_int_list(require(kv, "encoder.strides"), cfg.encoder.strides);
  cfg.encoder.leaky_slope = parse_double(require(kv, "encoder.leaky_slope"));
  cfg.encoder.embedding_dim =
      static_cast<int>(parse_int(require(kv, "encoder.embedding_dim")));
  cfg.projection.enabled = parse_int(require(kv, "projection.enabled")) != 0;
  cfg.projection.input_dim =
      static_cast<int>(parse_int(require(kv, "projection.input_dim")));
  cfg.projection.layer1_dim =
      static_cast<int>(parse_int(require(kv, "projection.layer1_dim")));
  cfg.projection.layer2_dim =
      static_cast<int>(parse_int(require(kv, "projection.layer2_dim")));
  cfg.projection.dropout_rate =
      parse_double(require(kv, "projection.dropout_rate"));
  cfg.projection.leaky_slope =
      parse_double(require(kv, "projection.leaky_slope"));
  cfg.regressor.input_dim =
      static_cast<int>(parse_int(require(kv, "regressor.input_dim")));
  parse_int_list(require(kv, "regressor.hidden_dims"), cfg.regressor.hidden_dims);
  cfg.regressor.leaky_slope =
      parse_double(require(kv, "regressor.leaky_slope"));
  cfg.loss.temperature = parse_double(require(kv, "loss.temperature"));
  cfg.loss.batch_pairs =
      static_cast<int>(parse_int(require(kv, "loss.batch_pairs")));
  cfg.validate();
  return cfg;
}

namespace {

ModelConfig scaled_config(int c0) {
  ModelConfig cfg;
  for (int l = 0; l < kEncoderLayers; ++l) {
    cfg.encoder.channels[l] = c0 << (l / 4);   // doubles every 4 layers
    cfg.encoder.strides[l] = (l % 2 == 0) ? 2 : 1;
  }
  cfg.encoder.embedding_dim = cfg.encoder.channels.back();
  const int emb = cfg.encoder.embedding_dim;
  cfg.projection.input_dim = emb / 2;
  cfg.projection.layer1_dim = emb / 4;
  cfg.projection.layer2_dim = emb / 8;
  cfg.regressor.input_dim = emb;
  cfg.regressor.hidden_dims = {emb / 2, emb / 4, emb / 8};
  cfg.validate();
  return cfg;
}

}  // namespace

ModelConfig model_config_from_preset(const std::string& preset) {
  if (preset == "default") return scaled_config(64);
  if (preset == "start16") return scaled_config(16);
  if (preset == "toy") return scaled_config(8);
  if (preset == "tiny") return scaled_config(4);
  throw UsageError("unknown model preset '" + preset +
                   "' (default, start16, toy, tiny)");
}

std::vector<std::string> model_preset_names() {
  return {"default", "start16", "toy", "tiny"};
}

}  // namespace jsqa
