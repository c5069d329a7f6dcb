// jsqa/resample.cc

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

#include "jsqa/resample.h"

#include <cmath>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Kaiser shape parameter; ~90 dB stopband attenuation.
constexpr double kKaiserBeta = 8.6;
// Sinc zero crossings kept on each side of the kernel center, measured at
// the (possibly stretched) cutoff.
constexpr int kZeroCrossings = 16;

// Modified Bessel function of the first kind, order zero. Power series;
// converges quickly for the argument range the Kaiser window needs.
double bessel_i0(double x) {
  const double half = x / 2.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

}  // namespace

AudioClip resample_to_16k(const AudioClip& clip) {
  if (clip.sample_rate < 8000) {
    throw DataError("resample_to_16k: sample rate " +
                    format_int(clip.sample_rate) + " below 8000 Hz");
  }
  if (clip.samples.empty()) {
    throw DataError("resample_to_16k: empty clip");
  }
  if (clip.sample_rate == kModelSampleRate) {
    return clip;
  }

  const double in_rate = static_cast<double>(clip.sample_rate);
  const double ratio = static_cast<double>(kModelSampleRate) / in_rate;
  const int64_t in_len = clip.length();
  const int64_t out_len = std::llround(static_cast<double>(in_len) * ratio);

  // Cutoff in cycles per input sample; shrunk below input Nyquist when
  // downsampling so the imaged band is rejected instead of aliased.
  const double cutoff = 0.5 * std::min(1.0, ratio);
  // Kernel half width in input samples; the sinc stretches by 1/(2*cutoff).
  const double half_width = kZeroCrossings / (2.0 * cutoff);
  const int half_taps = static_cast<int>(std::ceil(half_width));
  const double i0_beta = bessel_i0(kKaiserBeta);

  AudioClip out;
  out.sample_rate = kModelSampleRate;
  out.samples.resize(static_cast<size_t>(out_len));

  for (int64_t n = 0; n < out_len; ++n) {
    const double center = static_cast<double>(n) / ratio;
    const int64_t first = static_cast<int64_t>(std::ceil(center)) - half_taps;
    double acc = 0.0;
    double norm = 0.0;
    for (int64_t m = first; m <= first + 2 * half_taps; ++m) {
      const double u = static_cast<double>(m) - center;
      if (u < -half_width || u > half_width) continue;
      const double window_arg = u / half_width;
      const double window =
          bessel_i0(kKaiserBeta * std::sqrt(1.0 - window_arg * window_arg)) /
          i0_beta;
      const double tap = 2.0 * cutoff * sinc(2.0 * cutoff * u) * window;
      norm += tap;
      if (m >= 0 && m < in_len) {
        acc += clip.samples[static_cast<size_t>(m)] * tap;
      }
    }
    out.samples[static_cast<size_t>(n)] = norm > 0.0 ? acc / norm : 0.0;
  }
  return out;
}

AudioClip normalize_for_model(const AudioClip& clip) {
  AudioClip normalized = resample_to_16k(clip);
  validate_model_input(normalized);
  return normalized;
}

}  // namespace jsqa
