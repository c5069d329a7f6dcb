// jsqa/jnd_validate.cc

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

#include "jsqa/jnd_validate.h"

#include <fstream>
#include <utility>

#include "jsqa/errors.h"
#include "jsqa/numio.h"
#include "jsqa/parallel.h"

namespace jsqa {

ValidationReport validate_manifest(const SvmModel& model,
                                   const PairManifest& manifest,
                                   const Corpus& clean_corpus,
                                   const Corpus& noise_corpus,
                                   PesqScorer* pesq, int workers) {
  if (manifest.recipes.empty()) {
    throw DataError("validate_manifest: empty manifest");
  }
  const int64_t crop_len = manifest.config.crop_len;

  auto judge = [&](size_t i) -> std::pair<bool, double> {
    const JndPairRecipe& recipe = manifest.recipes[i];
    auto [clip_a, clip_b] =
        realize_pair(recipe, clean_corpus, noise_corpus, crop_len);
    // Less noisy member (higher SNR) is the reference.
    const bool a_is_hi = recipe.snr_a_db >= recipe.snr_b_db;
    const AudioClip& hi = a_is_hi ? clip_a : clip_b;
    const AudioClip& lo = a_is_hi ? clip_b : clip_a;
    const PairFeature feature =
        extract_pair_feature(hi, lo, model.kind, pesq);
    return svm_predict(model, feature);
  };

  const auto verdicts = parallel_map_ordered<std::pair<bool, double>>(
      manifest.recipes.size(), workers, judge);

  ValidationReport report;
  size_t within_count = 0;
  for (const auto& [within, margin] : verdicts) {
    report.within.push_back(within);
    report.margins.push_back(margin);
    if (within) ++within_count;
  }
  report.fraction_within =
      static_cast<double>(within_count) / static_cast<double>(verdicts.size());
  return report;
}

void save_validation_report(const ValidationReport& report,
                            const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write validation report " + path);
  out << "#jsqa-validation v1\tpairs="
      << format_int(static_cast<int64_t>(report.within.size()))
      << "\tfraction_within=" << format_double(report.fraction_within) << "\n";
  out << "pair\twithin\tmargin\n";
  for (size_t i = 0; i < report.within.size(); ++i) {
    out << format_int(static_cast<int64_t>(i)) << '\t'
        << (report.within[i] ? 1 : 0) << '\t'
        << format_double(report.margins[i]) << "\n";
  }
}

}  // namespace jsqa
