// jsqa/corpus.h

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

#ifndef JSQA_CORPUS_H_
#define JSQA_CORPUS_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jsqa/audio.h"

namespace jsqa {

// A directory of WAV files addressed by root-relative id. Ids are sorted
// lexicographically so every draw over the corpus is stable across machines
// and reruns. Clips are loaded lazily, normalized to 16 kHz mono, and cached.
class Corpus {
 public:
  explicit Corpus(const std::string& root);

  const std::string& root() const { return root_; }
  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(const std::string& id) const;

  // Normalized clip for an id. Thread-safe.
  const AudioClip& get(const std::string& id) const;

  // Ids usable for pair generation: at least min_len samples after
  // normalization and whole-clip power >= kMinUsablePower. Loads every clip.
  std::vector<std::string> eligible_ids(int64_t min_len) const;

 private:
  std::string root_;
  std::vector<std::string> ids_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::unique_ptr<AudioClip>> cache_;
};

}  // namespace jsqa

#endif  // JSQA_CORPUS_H_
