// jsqa/svm.h

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

#ifndef JSQA_SVM_H_
#define JSQA_SVM_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jsqa/jnd_features.h"

namespace jsqa {

// Linear soft-margin SVM over pair features. Decision: sign(w.x + b) with
// the tie (exactly zero) resolved to within-JND.
struct SvmModel {
  FeatureKind kind = FeatureKind::kSiSdr;
  std::vector<double> weights;
  double bias = 0.0;
  double margin_c = 1.0;
  uint64_t seed = 0;
  double train_accuracy = 0.0;
  // Single-label training data gives a constant classifier.
  bool degenerate = false;
  int degenerate_label = 0;
};

struct SvmTrainOptions {
  double margin_c = 1.0;
  int max_epochs = 2000;
  double initial_step = 0.1;
  uint64_t seed = 0;
};

// Full-batch subgradient descent on the primal hinge objective
//   J(w, b) = 0.5 |w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b)),
// with a monotone backtracking step: an update is only accepted if it does
// not increase J, so the objective is non-increasing epoch over epoch and
// training is deterministic.
SvmModel train_svm(const std::vector<PairFeature>& features,
                   const std::vector<int>& labels,
                   const SvmTrainOptions& options = {});

// (within_jnd, margin). Errors when the feature kind does not match.
std::pair<bool, double> svm_predict(const SvmModel& model,
                                    const PairFeature& feature);

// Hinge objective of a model on a labeled set; exposed for tests.
double svm_objective(const SvmModel& model,
                     const std::vector<PairFeature>& features,
                     const std::vector<int>& labels);

// Text model file: '#jsqa-svm v1' header plus weights/bias lines.
void save_svm(const SvmModel& model, const std::string& path);
SvmModel load_svm(const std::string& path);

}  // namespace jsqa

#endif  // JSQA_SVM_H_
