// jsqa/dataset.h

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

#ifndef JSQA_DATASET_H_
#define JSQA_DATASET_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jsqa/audio.h"

namespace jsqa {

// One labeled clip: WAV path relative to the dataset root, human score in
// [1, 5].
struct MosSample {
  std::string path;
  double mos = 0.0;
};

// Label table: lines of 'relative/path.wav<TAB>mos'; lines starting with '#'
// are ignored. Labels outside [1, 5] are rejected at load.
std::vector<MosSample> load_mos_table(const std::string& table_path);
void save_mos_table(const std::vector<MosSample>& samples,
                    const std::string& table_path);

// Samples with their audio loaded and normalized to 16 kHz mono.
class MosDataset {
 public:
  static MosDataset load(const std::string& table_path,
                         const std::string& audio_root);

  size_t size() const { return samples_.size(); }
  const std::vector<MosSample>& samples() const { return samples_; }
  const AudioClip& clip(size_t i) const { return clips_[i]; }
  double label(size_t i) const { return samples_[i].mos; }

 private:
  std::vector<MosSample> samples_;
  std::vector<AudioClip> clips_;
};

// Disjoint, exhaustive, seed-deterministic partition of [0, n) into
// train/val/test index sets. Ratios must sum to 1.
std::array<std::vector<size_t>, 3> split_indices(size_t n,
                                                 const std::array<double, 3>& ratios,
                                                 uint64_t seed);

}  // namespace jsqa

#endif  // JSQA_DATASET_H_
