// jsqa/wav_io.cc

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

#include "jsqa/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <vector>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
}

[[noreturn]] void bad_format(const std::string& path, const std::string& why) {
  throw AudioIoError(AudioIoError::Reason::kBadFormat,
                     path + ": malformed WAV (" + why + ")");
}

}  // namespace

AudioClip load_audio(const std::string& path, Downmix downmix) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AudioIoError(AudioIoError::Reason::kOpenFailed,
                       path + ": cannot open for reading");
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw AudioIoError(AudioIoError::Reason::kOpenFailed,
                       path + ": read failed");
  }
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    bad_format(path, "missing RIFF/WAVE header");
  }

  uint16_t format_tag = 0;
  uint16_t channels = 0;
  uint16_t bits_per_sample = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  const uint8_t* data = nullptr;
  size_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + pos;
    const uint32_t chunk_len = read_u32(chunk + 4);
    const size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) {
      bad_format(path, "chunk overruns file");
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_len < 16) bad_format(path, "fmt chunk too short");
      format_tag = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      sample_rate = read_u32(bytes.data() + body + 4);
      bits_per_sample = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt) bad_format(path, "no fmt chunk");
  if (data == nullptr) bad_format(path, "no data chunk");
  if (channels == 0 || sample_rate == 0) bad_format(path, "zero channels or rate");

  const bool pcm16 = format_tag == kFormatPcm && bits_per_sample == 16;
  const bool float32 = format_tag == kFormatIeeeFloat && bits_per_sample == 32;
  if (!pcm16 && !float32) {
    throw AudioIoError(
        AudioIoError::Reason::kUnsupportedEncoding,
        path + ": unsupported encoding (format tag " + format_int(format_tag) +
            ", " + format_int(bits_per_sample) +
            " bits); expected 16-bit PCM or 32-bit float");
  }

  const size_t bytes_per_sample = pcm16 ? 2 : 4;
  const size_t frame_bytes = bytes_per_sample * channels;
  const size_t frames = data_len / frame_bytes;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(sample_rate);
  clip.samples.resize(frames);
  for (size_t f = 0; f < frames; ++f) {
    const uint8_t* frame = data + f * frame_bytes;
    if (downmix == Downmix::kAverage) {
      double acc = 0.0;
      for (uint16_t c = 0; c < channels; ++c) {
        const uint8_t* s = frame + c * bytes_per_sample;
        if (pcm16) {
          int16_t v;
          std::memcpy(&v, s, 2);
          acc += static_cast<double>(v) / 32768.0;
        } else {
          float v;
          std::memcpy(&v, s, 4);
          acc += static_cast<double>(v);
        }
      }
      clip.samples[f] = acc / channels;
    } else {
      if (pcm16) {
        int16_t v;
        std::memcpy(&v, frame, 2);
        clip.samples[f] = static_cast<double>(v) / 32768.0;
      } else {
        float v;
        std::memcpy(&v, frame, 4);
        clip.samples[f] = static_cast<double>(v);
      }
    }
  }
  return clip;
}

size_t save_audio(const AudioClip& clip, const std::string& path) {
  if (clip.samples.empty() || clip.sample_rate <= 0) {
    throw DataError("save_audio: empty clip or invalid rate");
  }
  const uint32_t n = static_cast<uint32_t>(clip.samples.size());
  const uint32_t data_bytes = n * 2;

  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<uint32_t>(clip.sample_rate) * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);

  size_t clipped = 0;
  for (double s : clip.samples) {
    double limited = s;
    if (s > 1.0) {
      limited = 1.0;
      ++clipped;
    } else if (s < -1.0) {
      limited = -1.0;
      ++clipped;
    }
    double scaled = std::round(limited * 32768.0);
    if (scaled > 32767.0) scaled = 32767.0;  // +1.0 maps to full scale
    const auto v = static_cast<int16_t>(scaled);
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw AudioIoError(AudioIoError::Reason::kWriteFailed,
                       path + ": cannot open for writing");
  }
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw AudioIoError(AudioIoError::Reason::kWriteFailed,
                       path + ": write failed");
  }
  if (clipped > 0) {
    std::cerr << "warning: " << path << ": " << clipped
              << " sample(s) clipped at full scale\n";
  }
  return clipped;
}

}  // namespace jsqa
