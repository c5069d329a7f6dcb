// jsqa/pairgen.cc

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

#include "jsqa/pairgen.h"

#include <cmath>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

void PairGenConfig::validate() const {
  if (window_width_db < 0.0) {
    throw UsageError("pairgen: window width must be >= 0 dB");
  }
  if (snr_hi_db - snr_lo_db < window_width_db) {
    throw UsageError("pairgen: SNR range [" + format_double(snr_lo_db) + ", " +
                     format_double(snr_hi_db) +
                     "] narrower than the window width " +
                     format_double(window_width_db));
  }
  if (pair_count < 0) throw UsageError("pairgen: negative pair count");
  if (crop_len <= 0) throw UsageError("pairgen: crop_len must be positive");
}

std::pair<double, double> sample_snr_window(Rng& rng,
                                            const PairGenConfig& cfg) {
  cfg.validate();
  const double slack = cfg.snr_hi_db - cfg.snr_lo_db - cfg.window_width_db;
  const double lo = cfg.snr_lo_db + slack * rng.uniform();
  return {lo, lo + cfg.window_width_db};
}

std::pair<double, double> sample_snr_pair(Rng& rng,
                                          std::pair<double, double> window) {
  const auto [lo, hi] = window;
  if (hi < lo) throw UsageError("pairgen: inverted SNR window");
  const double a = rng.uniform(lo, hi);
  const double b = rng.uniform(lo, hi);
  return {a, b};
}

double noise_scale_for_snr(const AudioClip& clean, const AudioClip& noise,
                           double snr_db) {
  if (clean.length() != noise.length()) {
    throw DataError("noise_scale_for_snr: length mismatch (" +
                    format_int(clean.length()) + " vs " +
                    format_int(noise.length()) + ")");
  }
  const double p_clean = signal_power(clean);
  const double p_noise = signal_power(noise);
  if (p_clean < kMinUsablePower) {
    throw DataError("noise_scale_for_snr: clean segment power below usable floor");
  }
  if (p_noise < kMinUsablePower) {
    throw DataError("noise_scale_for_snr: noise segment power below usable floor");
  }
  return std::sqrt(p_clean / p_noise * std::pow(10.0, -snr_db / 10.0));
}

AudioClip mix_at_snr(const AudioClip& clean, const AudioClip& noise,
                     double snr_db) {
  if (clean.sample_rate != noise.sample_rate) {
    throw DataError("mix_at_snr: sample rate mismatch");
  }
  const double scale = noise_scale_for_snr(clean, noise, snr_db);
  AudioClip out;
  out.sample_rate = clean.sample_rate;
  out.samples.resize(clean.samples.size());
  for (size_t i = 0; i < clean.samples.size(); ++i) {
    out.samples[i] = clean.samples[i] + scale * noise.samples[i];
  }
  return out;
}

BuiltPair build_pair(const AudioClip& clean, const AudioClip& noise, Rng& rng,
                     const PairGenConfig& cfg) {
  const auto window = sample_snr_window(rng, cfg);
  const auto [snr_a, snr_b] = sample_snr_pair(rng, window);

  BuiltPair built;
  built.recipe.snr_a_db = snr_a;
  built.recipe.snr_b_db = snr_b;
  built.recipe.scale_m = noise_scale_for_snr(clean, noise, snr_a);
  built.recipe.scale_n = noise_scale_for_snr(clean, noise, snr_b);

  auto mix_with_scale = [&](double scale) {
    AudioClip out;
    out.sample_rate = clean.sample_rate;
    out.samples.resize(clean.samples.size());
    for (size_t i = 0; i < clean.samples.size(); ++i) {
      out.samples[i] = clean.samples[i] + scale * noise.samples[i];
    }
    return out;
  };
  built.clip_a = mix_with_scale(built.recipe.scale_m);
  built.clip_b = mix_with_scale(built.recipe.scale_n);
  return built;
}

PairManifest build_manifest(const Corpus& clean_corpus,
                            const Corpus& noise_corpus,
                            const PairGenConfig& cfg) {
  cfg.validate();
  const auto clean_ids = clean_corpus.eligible_ids(cfg.crop_len);
  const auto noise_ids = noise_corpus.eligible_ids(cfg.crop_len);
  if (clean_ids.empty()) {
    throw DataError("build_manifest: no eligible clean clips (need length >= " +
                    format_int(cfg.crop_len) + " and usable power)");
  }
  if (noise_ids.empty()) {
    throw DataError("build_manifest: no eligible noise clips");
  }

  PairManifest manifest;
  manifest.config = cfg;
  manifest.recipes.reserve(static_cast<size_t>(cfg.pair_count));

  Rng rng(cfg.seed);
  constexpr int kMaxRedraws = 1000;
  for (int64_t i = 0; i < cfg.pair_count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRedraws && !placed; ++attempt) {
      const auto& clean_id = clean_ids[rng.uniform_int(clean_ids.size())];
      const auto& noise_id = noise_ids[rng.uniform_int(noise_ids.size())];
      const AudioClip& clean = clean_corpus.get(clean_id);
      const AudioClip& noise = noise_corpus.get(noise_id);
      const int64_t clean_off = static_cast<int64_t>(rng.uniform_int(
          static_cast<uint64_t>(clean.length() - cfg.crop_len + 1)));
      const int64_t noise_off = static_cast<int64_t>(rng.uniform_int(
          static_cast<uint64_t>(noise.length() - cfg.crop_len + 1)));
      const AudioClip clean_seg = crop_at(clean, clean_off, cfg.crop_len);
      const AudioClip noise_seg = crop_at(noise, noise_off, cfg.crop_len);
      // A silent stretch of an otherwise usable file: redraw everything.
      if (signal_power(clean_seg) < kMinUsablePower ||
          signal_power(noise_seg) < kMinUsablePower) {
        continue;
      }
      BuiltPair built = build_pair(clean_seg, noise_seg, rng, cfg);
      built.recipe.clean_id = clean_id;
      built.recipe.noise_id = noise_id;
      built.recipe.clean_offset = clean_off;
      built.recipe.noise_offset = noise_off;
      built.recipe.seed = derive_seed(cfg.seed, static_cast<uint64_t>(i));
      manifest.recipes.push_back(std::move(built.recipe));
      placed = true;
    }
    if (!placed) {
      throw DataError("build_manifest: could not draw a usable pair after " +
                      format_int(kMaxRedraws) + " attempts (corpora too silent?)");
    }
  }
  return manifest;
}

std::pair<AudioClip, AudioClip> realize_pair(const JndPairRecipe& recipe,
                                             const Corpus& clean_corpus,
                                             const Corpus& noise_corpus,
                                             int64_t crop_len) {
  const AudioClip clean_seg =
      crop_at(clean_corpus.get(recipe.clean_id), recipe.clean_offset, crop_len);
  const AudioClip noise_seg =
      crop_at(noise_corpus.get(recipe.noise_id), recipe.noise_offset, crop_len);

  auto mix = [&](double scale) {
    AudioClip out;
    out.sample_rate = clean_seg.sample_rate;
    out.samples.resize(clean_seg.samples.size());
    for (size_t i = 0; i < clean_seg.samples.size(); ++i) {
      out.samples[i] = clean_seg.samples[i] + scale * noise_seg.samples[i];
    }
    return out;
  };
  return {mix(recipe.scale_m), mix(recipe.scale_n)};
}

}  // namespace jsqa
