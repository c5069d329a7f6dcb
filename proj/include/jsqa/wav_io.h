// jsqa/wav_io.h

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

#ifndef JSQA_WAV_IO_H_
#define JSQA_WAV_IO_H_

#include <cstddef>
#include <string>

#include "jsqa/audio.h"

namespace jsqa {

// How to collapse multi-channel files to the mono AudioClip.
enum class Downmix {
  kAverage,
  kFirstChannel,
};

// Reads a PCM WAV file: 16-bit integer or 32-bit IEEE float samples.
// Integer samples are scaled by 1/32768, so values land in [-1, 1).
// The original sample rate is preserved; multi-channel content is collapsed
// per `downmix`. Throws AudioIoError with reason kOpenFailed, kBadFormat or
// kUnsupportedEncoding.
AudioClip load_audio(const std::string& path,
                     Downmix downmix = Downmix::kAverage);

// Writes 16-bit PCM mono WAV at clip.sample_rate. Samples outside [-1, 1]
// are clipped at full scale; the number of clipped samples is returned and a
// warning goes to stderr when it is nonzero.
size_t save_audio(const AudioClip& clip, const std::string& path);

}  // namespace jsqa

#endif  // JSQA_WAV_IO_H_
