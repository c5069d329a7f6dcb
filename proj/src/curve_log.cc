// jsqa/curve_log.cc

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

#include "jsqa/curve_log.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

void CurveLog::append(int64_t step, int64_t epoch, double loss,
                      double seconds) {
  if (!points.empty() && step <= points.back().step) {
    throw TrainError("curve log: steps must be strictly increasing");
  }
  points.push_back(CurvePoint{step, epoch, loss, seconds});
}

void save_curve(const CurveLog& log, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write curve log " + path);
  out << "#jsqa-curve v1\n";
  for (const auto& p : log.points) {
    out << format_int(p.step) << '\t' << format_int(p.epoch) << '\t'
        << format_double(p.loss) << "\n";
  }
  std::ofstream side(path + ".walltime", std::ios::trunc);
  if (!side) throw DataError("cannot write curve sidecar for " + path);
  side << "#jsqa-curve-walltime v1\n";
  for (const auto& p : log.points) {
    side << format_int(p.step) << '\t' << format_double(p.seconds) << "\n";
  }
}

CurveLog load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open curve log " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("#jsqa-curve v1", 0) != 0) {
    throw DataError(path + ": missing '#jsqa-curve v1' header");
  }
  CurveLog log;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 3) {
      throw DataError(path + ": expected 3 fields per record");
    }
    log.append(parse_int(fields[0]), parse_int(fields[1]),
               parse_double(fields[2]), 0.0);
  }
  return log;
}

std::vector<double> smooth_losses(const std::vector<double>& losses,
                                  int window) {
  if (window < 1) throw UsageError("smooth_losses: window must be >= 1");
  std::vector<double> out(losses.size());
  double acc = 0.0;
  for (size_t i = 0; i < losses.size(); ++i) {
    acc += losses[i];
    if (i >= static_cast<size_t>(window)) acc -= losses[i - window];
    const auto span = std::min<size_t>(i + 1, static_cast<size_t>(window));
    out[i] = acc / static_cast<double>(span);
  }
  return out;
}

std::vector<double> epoch_mean_losses(const CurveLog& log) {
  std::vector<double> sums;
  std::vector<int64_t> counts;
  for (const auto& p : log.points) {
    if (p.epoch < 0) throw TrainError("curve log: negative epoch");
    const auto e = static_cast<size_t>(p.epoch);
    if (e >= sums.size()) {
      sums.resize(e + 1, 0.0);
      counts.resize(e + 1, 0);
    }
    sums[e] += p.loss;
    counts[e] += 1;
  }
  std::vector<double> means;
  means.reserve(sums.size());
  for (size_t e = 0; e < sums.size(); ++e) {
    if (counts[e] == 0) {
      throw TrainError("curve log: epoch " +
                       format_int(static_cast<int64_t>(e)) + " has no records");
    }
    means.push_back(sums[e] / static_cast<double>(counts[e]));
  }
  return means;
}

int64_t select_checkpoint_epoch(const CurveLog& log, int window,
                                double threshold) {
  const auto means = epoch_mean_losses(log);
  if (means.empty()) throw TrainError("select_checkpoint_epoch: empty log");
  for (size_t e = static_cast<size_t>(window); e < means.size(); ++e) {
    const double before = means[e - static_cast<size_t>(window)];
    const double improvement =
        (before - means[e]) / std::max(std::abs(before), 1e-12);
    if (improvement < threshold) return static_cast<int64_t>(e);
  }
  return static_cast<int64_t>(means.size()) - 1;
}

}  // namespace jsqa
