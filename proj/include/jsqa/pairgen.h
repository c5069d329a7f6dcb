// jsqa/pairgen.h

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

#ifndef JSQA_PAIRGEN_H_
#define JSQA_PAIRGEN_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jsqa/audio.h"
#include "jsqa/corpus.h"
#include "jsqa/rng.h"

namespace jsqa {

// Pair construction: one clean utterance and one noise excerpt are mixed
// twice, at two SNR targets drawn inside a narrow window, yielding two clips
// whose quality difference stays below the just-noticeable threshold. The
// window has a fixed width (6 dB by default) and is placed uniformly inside
// the global SNR range.
struct PairGenConfig {
  double snr_lo_db = -3.0;
  double snr_hi_db = 9.0;
  double window_width_db = 6.0;
  int64_t pair_count = 0;
  int64_t crop_len = 2 * kModelSampleRate;  // 2.0 s at 16 kHz
  uint64_t seed = 0;

  void validate() const;
};

// Everything needed to rebuild one pair bit-exactly: corpus keys, crop
// offsets into the normalized clips, the two SNR targets, and the two noise
// scale factors that were computed from the cropped segments.
struct JndPairRecipe {
  std::string clean_id;
  std::string noise_id;
  double snr_a_db = 0.0;
  double snr_b_db = 0.0;
  double scale_m = 0.0;  // noise scale for the snr_a mixture
  double scale_n = 0.0;  // noise scale for the snr_b mixture
  int64_t clean_offset = 0;
  int64_t noise_offset = 0;
  uint64_t seed = 0;
};

struct PairManifest {
  PairGenConfig config;
  std::vector<JndPairRecipe> recipes;
};

// SNR window of exactly cfg.window_width_db, start uniform over the feasible
// placements inside [snr_lo_db, snr_hi_db]. Consumes one draw.
std::pair<double, double> sample_snr_window(Rng& rng, const PairGenConfig& cfg);

// Two independent uniform draws inside the window; |a - b| <= window width.
std::pair<double, double> sample_snr_pair(Rng& rng,
                                          std::pair<double, double> window);

// Factor to apply to `noise` so that clean + scale * noise has the requested
// SNR: sqrt(P_clean / P_noise * 10^(-snr/10)). Clips must have equal length
// and usable power.
double noise_scale_for_snr(const AudioClip& clean, const AudioClip& noise,
                           double snr_db);

// clean + scale * noise at the requested SNR. Same length and rate as clean.
AudioClip mix_at_snr(const AudioClip& clean, const AudioClip& noise,
                     double snr_db);

// One pair from pre-cropped equal-length segments. Draws the window and the
// two SNRs from rng; fills the recipe's SNR/scale fields (ids and offsets are
// the caller's). Returns the recipe and the two mixtures.
struct BuiltPair {
  JndPairRecipe recipe;
  AudioClip clip_a;
  AudioClip clip_b;
};
BuiltPair build_pair(const AudioClip& clean, const AudioClip& noise, Rng& rng,
                     const PairGenConfig& cfg);

// cfg.pair_count recipes drawn with the seeded generator over the eligible
// clips of both corpora. Draw order per recipe (a format contract, relied on
// by reproducibility tests): clean id, noise id, clean offset, noise offset,
// window placement, snr_a, snr_b. Recipes whose cropped segments have
// unusable power are redrawn, consuming fresh draws.
PairManifest build_manifest(const Corpus& clean_corpus,
                            const Corpus& noise_corpus,
                            const PairGenConfig& cfg);

// The two mixtures a recipe describes, rebuilt from stored offsets and
// scales. Bit-identical to the clips produced at manifest build time.
std::pair<AudioClip, AudioClip> realize_pair(const JndPairRecipe& recipe,
                                             const Corpus& clean_corpus,
                                             const Corpus& noise_corpus,
                                             int64_t crop_len);

}  // namespace jsqa

#endif  // JSQA_PAIRGEN_H_
