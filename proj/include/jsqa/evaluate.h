// jsqa/evaluate.h

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

#ifndef JSQA_EVALUATE_H_
#define JSQA_EVALUATE_H_

#include <string>
#include <vector>

#include "jsqa/dataset.h"
#include "jsqa/metrics.h"
#include "jsqa/model.h"

namespace jsqa {

// Eval-mode score for one clip at its full length (zero-padded up to the
// receptive field when shorter).
double predict_mos(JsqaModel& model, const AudioClip& clip);

std::vector<double> predict_mos_batch(JsqaModel& model,
                                      const MosDataset& dataset);

// Runs the regressor over every clip and computes PCC / SRCC / RMSE / MAE.
EvalReport evaluate_model(JsqaModel& model, const MosDataset& dataset,
                          const std::string& dataset_id,
                          const std::string& checkpoint_id);

}  // namespace jsqa

#endif  // JSQA_EVALUATE_H_
