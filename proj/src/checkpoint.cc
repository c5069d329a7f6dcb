// jsqa/checkpoint.cc

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

#include "jsqa/checkpoint.h"

#include <cstring>
#include <fstream>

#include "jsqa/crc32.h"
#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {

constexpr char kMagic[8] = {'J', 'S', 'Q', 'A', 'C', 'K', 'P', 'T'};
constexpr uint32_t kVersion = 1;

class Writer {
 public:
  void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(uint32_t v) { raw(&v, 4); }
  void u64(uint64_t v) { raw(&v, 8); }
  void i64(int64_t v) { raw(&v, 8); }
  void str(const std::string& s) {
    u32(static_cast<uint32_t>(s.size()));
    buf_.append(s);
  }
  void doubles(const double* p, size_t n) {
    u64(n);
    raw(p, n * sizeof(double));
  }
  const std::string& bytes() const { return buf_; }

 private:
  void raw(const void* p, size_t n) {
    buf_.append(static_cast<const char*>(p), n);
  }
  std::string buf_;
};

class Reader {
 public:
  Reader(const char* data, size_t size) : data_(data), size_(size) {}

  uint8_t u8() { return static_cast<uint8_t>(take(1)[0]); }
  uint32_t u32() {
    uint32_t v;
    std::memcpy(&v, take(4), 4);
    return v;
  }
  uint64_t u64() {
    uint64_t v;
    std::memcpy(&v, take(8), 8);
    return v;
  }
  int64_t i64() {
    int64_t v;
    std::memcpy(&v, take(8), 8);
    return v;
  }
  std::string str() {
    const uint32_t n = u32();
    return std::string(take(n), n);
  }
  std::vector<double> doubles() {
    const uint64_t n = u64();
    if (n > size_ - pos_) {
      throw DataError("checkpoint: tensor overruns file");
    }
    std::vector<double> out(n);
    std::memcpy(out.data(), take(n * sizeof(double)), n * sizeof(double));
    return out;
  }
  size_t pos() const { return pos_; }

 private:
  const char* take(size_t n) {
    if (pos_ + n > size_) throw DataError("checkpoint: truncated file");
    const char* p = data_ + pos_;
    pos_ += n;
    return p;
  }
  const char* data_;
  size_t size_;
  size_t pos_ = 0;
};

std::string encode(const Checkpoint& ckpt) {
  Writer w;
  w.u32(ckpt.version);
  w.i64(ckpt.epoch);
  w.i64(ckpt.global_step);
  w.u64(ckpt.seed);
  w.str(ckpt.model_config_text);
  w.str(ckpt.train_config_text);
  w.u32(static_cast<uint32_t>(ckpt.tensors.size()));
  for (const auto& [name, values] : ckpt.tensors) {
    w.str(name);
    w.doubles(values.data(), values.size());
  }
  w.u8(ckpt.has_optimizer ? 1 : 0);
  if (ckpt.has_optimizer) {
    w.i64(ckpt.adam_timestep);
    w.u32(static_cast<uint32_t>(ckpt.adam_slots.size()));
    for (const auto& [name, slot] : ckpt.adam_slots) {
      w.str(name);
      w.doubles(slot.m.data(), slot.m.size());
      w.doubles(slot.v.data(), slot.v.size());
    }
  }
  return w.bytes();
}

}  // namespace

Checkpoint make_checkpoint(JsqaModel& model, const AdamOptimizer* optimizer,
                           int64_t epoch, int64_t global_step, uint64_t seed,
                           const std::string& train_config_text) {
  Checkpoint ckpt;
  ckpt.version = kVersion;
  ckpt.epoch = epoch;
  ckpt.global_step = global_step;
  ckpt.seed = seed;
  ckpt.model_config_text = model.config().to_text();
  ckpt.train_config_text = train_config_text;
  model.visit_tensors([&](const TensorRef& t) {
    ckpt.tensors.emplace_back(t.name,
                              std::vector<double>(t.data, t.data + t.size));
  });
  if (optimizer != nullptr) {
    ckpt.has_optimizer = true;
    ckpt.adam_timestep = optimizer->timestep();
    ckpt.adam_slots = optimizer->slots();
  }
  return ckpt;
}

void apply_checkpoint_to_model(const Checkpoint& ckpt, JsqaModel& model) {
  size_t cursor = 0;
  model.visit_tensors([&](const TensorRef& t) {
    if (cursor >= ckpt.tensors.size()) {
      throw DataError("checkpoint: fewer tensors than the model expects");
    }
    const auto& [name, values] = ckpt.tensors[cursor];
    if (name != t.name || values.size() != t.size) {
      throw DataError("checkpoint: tensor mismatch at '" + name +
                      "' (model expects '" + t.name + "')");
    }
    std::memcpy(t.data, values.data(), t.size * sizeof(double));
    ++cursor;
  });
  if (cursor != ckpt.tensors.size()) {
    throw DataError("checkpoint: more tensors than the model expects");
  }
}

JsqaModel model_from_checkpoint(const Checkpoint& ckpt) {
  JsqaModel model(ModelConfig::from_text(ckpt.model_config_text));
  apply_checkpoint_to_model(ckpt, model);
  return model;
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  const std::string body = encode(ckpt);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write checkpoint " + path);
  out.write(kMagic, sizeof(kMagic));
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  uint32_t crc = crc32_update(0, kMagic, sizeof(kMagic));
  crc = crc32_update(crc, body.data(), body.size());
  out.write(reinterpret_cast<const char*>(&crc), sizeof(crc));
  if (!out) throw DataError("checkpoint write failed for " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.size() < sizeof(kMagic) + 4 + 4) {
    throw DataError("checkpoint " + path + ": truncated file");
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw DataError("checkpoint " + path + ": bad magic bytes");
  }
  uint32_t stored_crc;
  std::memcpy(&stored_crc, bytes.data() + bytes.size() - 4, 4);
  const uint32_t actual_crc =
      crc32_update(0, bytes.data(), bytes.size() - 4);
  if (stored_crc != actual_crc) {
    throw DataError("checkpoint " + path +
                    ": checksum mismatch (corrupt or truncated)");
  }

  Reader r(bytes.data() + sizeof(kMagic), bytes.size() - sizeof(kMagic) - 4);
  Checkpoint ckpt;
  ckpt.version = r.u32();
  if (ckpt.version != kVersion) {
    throw DataError("checkpoint " + path + ": format version " +
                    format_int(ckpt.version) + ", expected " +
                    format_int(kVersion));
  }
  ckpt.epoch = r.i64();
  ckpt.global_step = r.i64();
  ckpt.seed = r.u64();
  ckpt.model_config_text = r.str();
  ckpt.train_config_text = r.str();
  const uint32_t n_tensors = r.u32();
  for (uint32_t i = 0; i < n_tensors; ++i) {
    std::string name = r.str();
    std::vector<double> values = r.doubles();
    ckpt.tensors.emplace_back(std::move(name), std::move(values));
  }
  ckpt.has_optimizer = r.u8() != 0;
  if (ckpt.has_optimizer) {
    ckpt.adam_timestep = r.i64();
    const uint32_t n_slots = r.u32();
    for (uint32_t i = 0; i < n_slots; ++i) {
      std::string name = r.str();
      AdamOptimizer::Slot slot;
      slot.m = r.doubles();
      slot.v = r.doubles();
      ckpt.adam_slots.emplace_back(std::move(name), std::move(slot));
    }
  }
  return ckpt;
}

}  // namespace jsqa
