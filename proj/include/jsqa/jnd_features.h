// jsqa/jnd_features.h

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

#ifndef JSQA_JND_FEATURES_H_
#define JSQA_JND_FEATURES_H_

#include <string>
#include <vector>

#include "jsqa/audio.h"

namespace jsqa {

enum class FeatureKind {
  kPesq,
  kSiSdr,
  kBoth,  // values ordered [pesq, si_sdr]
};

std::string feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(const std::string& name);
int feature_dim(FeatureKind kind);

// Objective similarity features for one pair; the less-noisy member (higher
// SNR) is always the reference.
struct PairFeature {
  FeatureKind kind = FeatureKind::kSiSdr;
  std::vector<double> values;
};

// Intrusive scorer interface. The bundled implementation shells out to an
// external command; the scorer itself is never reimplemented here.
class PesqScorer {
 public:
  virtual ~PesqScorer() = default;
  // Score of `degraded` against `reference`; conventional range [-0.5, 4.5].
  virtual double score(const AudioClip& reference,
                       const AudioClip& degraded) = 0;
};

// Runs a user-supplied command for each pair. The template must contain the
// placeholders {ref} and {deg}; both are replaced with paths to temporary
// 16-bit WAV files. The last number on the command's standard output is the
// score.
class CommandPesqScorer : public PesqScorer {
 public:
  explicit CommandPesqScorer(std::string command_template);
  double score(const AudioClip& reference, const AudioClip& degraded) override;

 private:
  std::string command_template_;
};

// Infinite SI-SDR (identical pair members) is capped at this value so SVM
// features stay finite; ordering among finite values is unaffected.
constexpr double kSiSdrFeatureCap = 100.0;

// Feature for a pair whose higher-SNR member is clip_hi. `pesq` may be null
// for kind kSiSdr and is required otherwise.
PairFeature extract_pair_feature(const AudioClip& clip_hi,
                                 const AudioClip& clip_lo, FeatureKind kind,
                                 PesqScorer* pesq);

// Labeled feature table: one pair per line, feature values then the label
// ("within" or "beyond"), tab-separated, with a '#jsqa-jnd-features v1'
// header carrying kind=<name>.
struct LabeledFeatures {
  FeatureKind kind = FeatureKind::kSiSdr;
  std::vector<PairFeature> features;
  std::vector<int> labels;  // +1 = within JND, -1 = beyond
};

LabeledFeatures load_labeled_features(const std::string& path);
void save_labeled_features(const LabeledFeatures& data,
                           const std::string& path);

}  // namespace jsqa

#endif  // JSQA_JND_FEATURES_H_
