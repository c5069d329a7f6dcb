// jsqa/jnd_validate.h

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

#ifndef JSQA_JND_VALIDATE_H_
#define JSQA_JND_VALIDATE_H_

#include <string>
#include <vector>

#include "jsqa/corpus.h"
#include "jsqa/manifest.h"
#include "jsqa/svm.h"

namespace jsqa {

struct ValidationReport {
  double fraction_within = 0.0;
  std::vector<bool> within;      // one flag per manifest pair
  std::vector<double> margins;   // SVM decision values
};

// Realizes every pair of the manifest, extracts the model's feature kind
// with the higher-SNR member as reference, and classifies it. The fraction
// is order-invariant by construction. Errors on an empty manifest.
ValidationReport validate_manifest(const SvmModel& model,
                                   const PairManifest& manifest,
                                   const Corpus& clean_corpus,
                                   const Corpus& noise_corpus,
                                   PesqScorer* pesq, int workers = 1);

void save_validation_report(const ValidationReport& report,
                            const std::string& path);

}  // namespace jsqa

#endif  // JSQA_JND_VALIDATE_H_
