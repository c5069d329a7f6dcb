// jsqa/metrics.cc

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

#include "jsqa/metrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {

void check_lengths(std::span<const double> x, std::span<const double> y,
                   size_t min_n, const char* op) {
  if (x.size() != y.size()) {
    throw DataError(std::string(op) + ": length mismatch");
  }
  if (x.size() < min_n) {
    throw DataError(std::string(op) + ": needs at least " +
                    format_int(static_cast<int64_t>(min_n)) + " samples");
  }
}

}  // namespace

double pcc(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y, 2, "pcc");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    throw UndefinedCorrelation("pcc: zero variance input");
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> x) {
  const size_t n = x.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    // positions i..j share the mean of ranks i+1..j+1
    const double mean_rank = (static_cast<double>(i + 1) +
                              static_cast<double>(j + 1)) /
                             2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double srcc(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y, 2, "srcc");
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pcc(rx, ry);
}

double rmse(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y, 1, "rmse");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double e = x[i] - y[i];
    acc += e * e;
  }
  return std::sqrt(acc / static_cast<double>(x.size()));
}

double mae(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y, 1, "mae");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += std::abs(x[i] - y[i]);
  return acc / static_cast<double>(x.size());
}

EvalReport make_eval_report(std::span<const double> predictions,
                            std::span<const double> targets,
                            const std::string& dataset_id,
                            const std::string& checkpoint_id) {
  check_lengths(predictions, targets, 2, "make_eval_report");
  EvalReport report;
  report.n = predictions.size();
  report.dataset_id = dataset_id;
  report.checkpoint_id = checkpoint_id;
  report.rmse = rmse(predictions, targets);
  report.mae = mae(predictions, targets);
  try {
    report.pcc = pcc(predictions, targets);
  } catch (const UndefinedCorrelation&) {
  }
  try {
    report.srcc = srcc(predictions, targets);
  } catch (const UndefinedCorrelation&) {
  }
  return report;
}

namespace {
std::string opt_str(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : "undefined";
}
}  // namespace

std::string eval_report_summary_line(const EvalReport& report) {
  return "EVAL pcc=" + opt_str(report.pcc) + " srcc=" + opt_str(report.srcc) +
         " rmse=" + format_double(report.rmse) +
         " mae=" + format_double(report.mae) +
         " n=" + format_int(static_cast<int64_t>(report.n));
}

void save_eval_report(const EvalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write eval report " + path);
  out << "#jsqa-eval v1\tdataset=" << report.dataset_id
      << "\tcheckpoint=" << report.checkpoint_id
      << "\tn=" << format_int(static_cast<int64_t>(report.n)) << "\n";
  out << "pcc\t" << opt_str(report.pcc) << "\n";
  out << "srcc\t" << opt_str(report.srcc) << "\n";
  out << "rmse\t" << format_double(report.rmse) << "\n";
  out << "mae\t" << format_double(report.mae) << "\n";
}

}  // namespace jsqa
