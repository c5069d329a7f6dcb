// jsqa/metrics.h

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

#ifndef JSQA_METRICS_H_
#define JSQA_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jsqa {

// Pearson product-moment correlation. Needs n >= 2 and nonzero variance in
// both arguments; throws UndefinedCorrelation otherwise.
double pcc(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation: Pearson over average ranks (ties get the mean
// of the ranks they span).
double srcc(std::span<const double> x, std::span<const double> y);

double rmse(std::span<const double> x, std::span<const double> y);
double mae(std::span<const double> x, std::span<const double> y);

// Average ranks, 1-based; exposed for tests.
std::vector<double> average_ranks(std::span<const double> x);

// Corpus-level evaluation summary. Correlations are empty when undefined
// (constant predictions or labels); error magnitudes are always present.
struct EvalReport {
  std::optional<double> pcc;
  std::optional<double> srcc;
  double rmse = 0.0;
  double mae = 0.0;
  size_t n = 0;
  std::string dataset_id;
  std::string checkpoint_id;
};

EvalReport make_eval_report(std::span<const double> predictions,
                            std::span<const double> targets,
                            const std::string& dataset_id,
                            const std::string& checkpoint_id);

// Fixed column order: PCC, SRCC, RMSE, MAE.
std::string eval_report_summary_line(const EvalReport& report);
void save_eval_report(const EvalReport& report, const std::string& path);

}  // namespace jsqa

#endif  // JSQA_METRICS_H_
