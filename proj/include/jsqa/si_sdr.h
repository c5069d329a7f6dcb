// jsqa/si_sdr.h

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

#ifndef JSQA_SI_SDR_H_
#define JSQA_SI_SDR_H_

#include "jsqa/audio.h"

namespace jsqa {

// Scale-invariant signal-to-distortion ratio in dB. The estimate is
// projected onto the reference; the ratio of projected-target power to
// residual power is returned on a log scale. Invariant to positive
// rescaling of the estimate by construction. Returns +infinity when the
// residual is zero (the estimate is a clean rescale of the reference);
// residual power below 1e-25 of the target power counts as zero, which
// absorbs the rounding left by an exact rescale in floating point.
double si_sdr(const AudioClip& reference, const AudioClip& estimate);

}  // namespace jsqa

#endif  // JSQA_SI_SDR_H_
