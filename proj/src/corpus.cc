// jsqa/corpus.cc

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

#include "jsqa/corpus.h"

#include <algorithm>
#include <filesystem>

#include "jsqa/errors.h"
#include "jsqa/resample.h"
#include "jsqa/wav_io.h"

namespace fs = std::filesystem;

namespace jsqa {

Corpus::Corpus(const std::string& root) : root_(root) {
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) {
    throw DataError("corpus root is not a directory: " + root_);
  }
  for (auto it = fs::recursive_directory_iterator(root_);
       it != fs::recursive_directory_iterator(); ++it) {
    if (!it->is_regular_file()) continue;
    auto ext = it->path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext != ".wav") continue;
    ids_.push_back(fs::relative(it->path(), root_).generic_string());
  }
  std::sort(ids_.begin(), ids_.end());
}

bool Corpus::contains(const std::string& id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

const AudioClip& Corpus::get(const std::string& id) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(id);
    if (it != cache_.end()) return *it->second;
  }
  if (!contains(id)) {
    throw DataError("corpus " + root_ + ": unknown clip id '" + id + "'");
  }
  auto clip = std::make_unique<AudioClip>(
      normalize_for_model(load_audio((fs::path(root_) / id).string())));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(id, std::move(clip));
  return *it->second;
}

std::vector<std::string> Corpus::eligible_ids(int64_t min_len) const {
  std::vector<std::string> out;
  for (const auto& id : ids_) {
    const AudioClip& clip = get(id);
    if (clip.length() < min_len) continue;
    if (signal_power(clip) < kMinUsablePower) continue;
    out.push_back(id);
  }
  return out;
}

}  // namespace jsqa
