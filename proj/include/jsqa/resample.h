// jsqa/resample.h

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

#ifndef JSQA_RESAMPLE_H_
#define JSQA_RESAMPLE_H_

#include "jsqa/audio.h"

namespace jsqa {

// Kaiser-windowed sinc resampling to 16 kHz. A clip already at 16 kHz is
// returned unchanged. Requires sample_rate >= 8000. Output length is
// round(len * 16000 / rate), so duration is preserved within one sample.
AudioClip resample_to_16k(const AudioClip& clip);

// Convenience: resample to 16 kHz and check the model-input contract.
AudioClip normalize_for_model(const AudioClip& clip);

}  // namespace jsqa

#endif  // JSQA_RESAMPLE_H_
