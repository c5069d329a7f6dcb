// tests/test_util.h

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

#ifndef JSQA_TESTS_TEST_UTIL_H_
#define JSQA_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "jsqa/audio.h"
#include "jsqa/rng.h"
#include "jsqa/wav_io.h"

namespace jsqa::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("jsqa_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline AudioClip make_sine(double freq_hz, int sample_rate, int64_t len,
                           double amplitude = 0.5, double phase = 0.0) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(static_cast<size_t>(len));
  for (int64_t i = 0; i < len; ++i) {
    clip.samples[static_cast<size_t>(i)] =
        amplitude * std::sin(2.0 * M_PI * freq_hz * i / sample_rate + phase);
  }
  return clip;
}

inline AudioClip make_noise(int sample_rate, int64_t len, uint64_t seed,
                            double amplitude = 0.3) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(static_cast<size_t>(len));
  Rng rng(seed);
  for (auto& s : clip.samples) {
    s = amplitude * (2.0 * rng.uniform() - 1.0);
  }
  return clip;
}

// Speech-ish synthetic clip: a few harmonics with slow amplitude modulation,
// distinct per seed.
inline AudioClip make_voiced(int sample_rate, int64_t len, uint64_t seed) {
  Rng rng(seed);
  const double f0 = 90.0 + 140.0 * rng.uniform();
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(static_cast<size_t>(len), 0.0);
  for (int h = 1; h <= 4; ++h) {
    const double amp = 0.25 / h * (0.5 + rng.uniform());
    const double phase = 2.0 * M_PI * rng.uniform();
    for (int64_t i = 0; i < len; ++i) {
      clip.samples[static_cast<size_t>(i)] +=
          amp * std::sin(2.0 * M_PI * f0 * h * i / sample_rate + phase);
    }
  }
  const double mod_rate = 1.5 + 2.0 * rng.uniform();
  for (int64_t i = 0; i < len; ++i) {
    const double env =
        0.55 + 0.45 * std::sin(2.0 * M_PI * mod_rate * i / sample_rate);
    clip.samples[static_cast<size_t>(i)] *= env;
  }
  return clip;
}

// Writes `count` WAV files under dir; returns their relative names.
inline std::vector<std::string> write_corpus(const std::filesystem::path& dir,
                                             int count, int64_t len,
                                             uint64_t seed, bool voiced) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    const std::string name =
        (voiced ? "clean_" : "noise_") + std::to_string(i) + ".wav";
    const AudioClip clip =
        voiced ? make_voiced(16000, len, derive_seed(seed, i))
               : make_noise(16000, len, derive_seed(seed, i + 1000));
    save_audio(clip, (dir / name).string());
    names.push_back(name);
  }
  return names;
}

}  // namespace jsqa::testing

#endif  // JSQA_TESTS_TEST_UTIL_H_
