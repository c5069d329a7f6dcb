// jsqa/curve_log.h

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

#ifndef JSQA_CURVE_LOG_H_
#define JSQA_CURVE_LOG_H_

#include <cstdint>
#include <string>
#include <vector>

namespace jsqa {

// One record per optimization step. Steps are strictly increasing.
struct CurvePoint {
  int64_t step = 0;
  int64_t epoch = 0;
  double loss = 0.0;
  double seconds = 0.0;  // wall time, excluded from the primary file
};

struct CurveLog {
  std::vector<CurvePoint> points;

  void append(int64_t step, int64_t epoch, double loss, double seconds);
};

// Primary file: step<TAB>epoch<TAB>loss, header '#jsqa-curve v1'. Wall times
// go to a sidecar (path + ".walltime") so reruns with the same seed produce
// byte-identical primary files.
void save_curve(const CurveLog& log, const std::string& path);
CurveLog load_curve(const std::string& path);

// Mean of the trailing `window` losses ending at each index, equal-weight.
std::vector<double> smooth_losses(const std::vector<double>& losses,
                                  int window);

// Per-epoch mean loss; epoch ids must appear in nondecreasing order.
std::vector<double> epoch_mean_losses(const CurveLog& log);

// First epoch (0-based) at which the relative improvement of the per-epoch
// mean loss over the trailing `window` epochs falls below `threshold`;
// returns the last epoch when that never happens. Used to pick the
// pretraining checkpoint for fine-tuning.
int64_t select_checkpoint_epoch(const CurveLog& log, int window = 5,
                                double threshold = 0.01);

}  // namespace jsqa

#endif  // JSQA_CURVE_LOG_H_
