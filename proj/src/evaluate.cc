// jsqa/evaluate.cc

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

#include "jsqa/evaluate.h"

#include "jsqa/errors.h"

namespace jsqa {

double predict_mos(JsqaModel& model, const AudioClip& clip) {
  validate_model_input(clip);
  const int64_t min_len = model.config().encoder.receptive_field();
  const int64_t len = std::max<int64_t>(clip.length(), min_len);
  Mat waves = Mat::Zero(len, 1);
  for (int64_t i = 0; i < clip.length(); ++i) {
    waves(i, 0) = clip.samples[static_cast<size_t>(i)];
  }
  const Vec scores = model.score_forward(waves, /*train=*/false, nullptr);
  return scores[0];
}

std::vector<double> predict_mos_batch(JsqaModel& model,
                                      const MosDataset& dataset) {
  std::vector<double> out;
  out.reserve(dataset.size());
  for (size_t i = 0; i < dataset.size(); ++i) {
    out.push_back(predict_mos(model, dataset.clip(i)));
  }
  return out;
}

EvalReport evaluate_model(JsqaModel& model, const MosDataset& dataset,
                          const std::string& dataset_id,
                          const std::string& checkpoint_id) {
  if (dataset.size() < 2) {
    throw DataError("evaluate_model: need at least 2 labeled samples");
  }
  const std::vector<double> predictions = predict_mos_batch(model, dataset);
  std::vector<double> targets;
  targets.reserve(dataset.size());
  for (size_t i = 0; i < dataset.size(); ++i) targets.push_back(dataset.label(i));
  return make_eval_report(predictions, targets, dataset_id, checkpoint_id);
}

}  // namespace jsqa
