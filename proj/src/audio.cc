// jsqa/audio.cc

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

#include "jsqa/audio.h"

#include <algorithm>
#include <cmath>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

double signal_power(const AudioClip& clip) {
  if (clip.samples.empty()) {
    throw DataError("signal_power: empty clip");
  }
  double acc = 0.0;
  for (double s : clip.samples) acc += s * s;
  return acc / static_cast<double>(clip.samples.size());
}

AudioClip crop_or_pad(const AudioClip& clip, int64_t target_len,
                      CropPolicy policy, Rng& rng) {
  if (target_len <= 0) {
    throw DataError("crop_or_pad: target_len must be positive");
  }
  const int64_t len = clip.length();
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  if (len == target_len) {
    out.samples = clip.samples;
    return out;
  }
  if (len < target_len) {
    out.samples = clip.samples;
    out.samples.resize(static_cast<size_t>(target_len), 0.0);
    return out;
  }
  int64_t offset = 0;
  switch (policy) {
    case CropPolicy::kRandomCrop:
      offset = static_cast<int64_t>(
          rng.uniform_int(static_cast<uint64_t>(len - target_len + 1)));
      break;
    case CropPolicy::kCenterCrop:
      offset = (len - target_len) / 2;
      break;
    case CropPolicy::kZeroPad:
      offset = 0;
      break;
  }
  out.samples.assign(clip.samples.begin() + offset,
                     clip.samples.begin() + offset + target_len);
  return out;
}

AudioClip crop_at(const AudioClip& clip, int64_t offset, int64_t len) {
  if (offset < 0 || len <= 0 || offset + len > clip.length()) {
    throw DataError("crop_at: window [" + format_int(offset) + ", " +
                    format_int(offset + len) + ") outside clip of length " +
                    format_int(clip.length()));
  }
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.assign(clip.samples.begin() + offset,
                     clip.samples.begin() + offset + len);
  return out;
}

void validate_model_input(const AudioClip& clip) {
  if (clip.samples.empty()) {
    throw DataError("model input: empty clip");
  }
  if (clip.sample_rate != kModelSampleRate) {
    throw DataError("model input: sample rate " +
                    format_int(clip.sample_rate) + ", expected " +
                    format_int(kModelSampleRate));
  }
  for (double s : clip.samples) {
    if (!std::isfinite(s)) {
      throw DataError("model input: non-finite sample");
    }
  }
}

}  // namespace jsqa
