// jsqa/audio.h

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

#ifndef JSQA_AUDIO_H_
#define JSQA_AUDIO_H_

#include <cstdint>
#include <vector>

#include "jsqa/rng.h"

namespace jsqa {

// All model-facing audio is mono at this rate.
constexpr int kModelSampleRate = 16000;

// A clip whose whole-segment power falls below this is unusable for SNR
// scaling (the scale divides by it).
constexpr double kMinUsablePower = 1e-12;

// Mono waveform, amplitudes nominally in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  int64_t length() const { return static_cast<int64_t>(samples.size()); }
  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Mean squared amplitude. Errors on an empty clip.
double signal_power(const AudioClip& clip);

enum class CropPolicy {
  kRandomCrop,
  kCenterCrop,
  kZeroPad,
};

// Returns a clip of exactly target_len samples. Shorter inputs are padded
// with trailing zeros under every policy; equal-length inputs pass through
// unchanged; longer inputs are cut at an offset chosen by the policy
// (kZeroPad truncates at the head). Deterministic for a fixed rng state.
AudioClip crop_or_pad(const AudioClip& clip, int64_t target_len,
                      CropPolicy policy, Rng& rng);

// Extracts [offset, offset + len); the window must lie inside the clip.
AudioClip crop_at(const AudioClip& clip, int64_t offset, int64_t len);

// Checks the model-input contract: 16 kHz, non-empty, all samples finite.
// Throws DataError with the first violated condition.
void validate_model_input(const AudioClip& clip);

}  // namespace jsqa

#endif  // JSQA_AUDIO_H_
