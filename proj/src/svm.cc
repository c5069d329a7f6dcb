// jsqa/svm.cc

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

#include "jsqa/svm.h"

#include <cmath>
#include <fstream>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {

double decision_value(const std::vector<double>& weights, double bias,
                      const std::vector<double>& x) {
  double acc = bias;
  for (size_t i = 0; i < weights.size(); ++i) acc += weights[i] * x[i];
  return acc;
}

double objective(const std::vector<double>& w, double b, double c,
                 const std::vector<PairFeature>& features,
                 const std::vector<int>& labels) {
  double j = 0.0;
  for (double wi : w) j += 0.5 * wi * wi;
  for (size_t i = 0; i < features.size(); ++i) {
    const double margin =
        labels[i] * decision_value(w, b, features[i].values);
    if (margin < 1.0) j += c * (1.0 - margin);
  }
  return j;
}

double accuracy(const std::vector<double>& w, double b,
                const std::vector<PairFeature>& features,
                const std::vector<int>& labels) {
  size_t hits = 0;
  for (size_t i = 0; i < features.size(); ++i) {
    const double value = decision_value(w, b, features[i].values);
    const int predicted = value >= 0.0 ? +1 : -1;
    if (predicted == labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(features.size());
}

}  // namespace

SvmModel train_svm(const std::vector<PairFeature>& features,
                   const std::vector<int>& labels,
                   const SvmTrainOptions& options) {
  if (features.empty()) throw DataError("train_svm: no training examples");
  if (features.size() != labels.size()) {
    throw DataError("train_svm: feature/label count mismatch");
  }
  const FeatureKind kind = features.front().kind;
  const size_t dim = features.front().values.size();
  for (const auto& f : features) {
    if (f.kind != kind || f.values.size() != dim) {
      throw DataError("train_svm: inconsistent feature kinds or dimensions");
    }
  }

  SvmModel model;
  model.kind = kind;
  model.margin_c = options.margin_c;
  model.seed = options.seed;
  model.weights.assign(dim, 0.0);

  bool has_pos = false;
  bool has_neg = false;
  for (int y : labels) (y > 0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) {
    model.degenerate = true;
    model.degenerate_label = has_pos ? +1 : -1;
    model.bias = static_cast<double>(model.degenerate_label);
    model.train_accuracy = 1.0;
    return model;
  }

  std::vector<double> w(dim, 0.0);
  double b = 0.0;
  double j = objective(w, b, options.margin_c, features, labels);

  for (int epoch = 0; epoch < options.max_epochs; ++epoch) {
    // Full-batch subgradient of J at (w, b).
    std::vector<double> gw(w);  // d(0.5|w|^2)/dw = w
    double gb = 0.0;
    for (size_t i = 0; i < features.size(); ++i) {
      const double margin =
          labels[i] * decision_value(w, b, features[i].values);
      if (margin < 1.0) {
        for (size_t d = 0; d < dim; ++d) {
          gw[d] -= options.margin_c * labels[i] * features[i].values[d];
        }
        gb -= options.margin_c * labels[i];
      }
    }

    // Backtrack until the objective does not increase. Keeps the epoch
    // sequence of J non-increasing even at nonsmooth points.
    const double j_before = j;
    double step = options.initial_step;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      std::vector<double> w_new(dim);
      for (size_t d = 0; d < dim; ++d) w_new[d] = w[d] - step * gw[d];
      const double b_new = b - step * gb;
      const double j_new =
          objective(w_new, b_new, options.margin_c, features, labels);
      if (j_new <= j) {
        w = std::move(w_new);
        b = b_new;
        j = j_new;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no non-increasing step left
    if (j_before - j <= 1e-14 * std::max(1.0, j_before)) break;
  }

  model.weights = w;
  model.bias = b;
  model.train_accuracy = accuracy(w, b, features, labels);
  return model;
}

std::pair<bool, double> svm_predict(const SvmModel& model,
                                    const PairFeature& feature) {
  if (feature.kind != model.kind) {
    throw DataError("svm_predict: feature kind '" +
                    feature_kind_name(feature.kind) +
                    "' does not match model kind '" +
                    feature_kind_name(model.kind) + "'");
  }
  if (model.degenerate) {
    return {model.degenerate_label > 0, model.bias};
  }
  if (feature.values.size() != model.weights.size()) {
    throw DataError("svm_predict: feature dimension mismatch");
  }
  const double margin = decision_value(model.weights, model.bias,
                                       feature.values);
  return {margin >= 0.0, margin};
}

double svm_objective(const SvmModel& model,
                     const std::vector<PairFeature>& features,
                     const std::vector<int>& labels) {
  return objective(model.weights, model.bias, model.margin_c, features,
                   labels);
}

namespace {
constexpr char kSvmMagic[] = "#jsqa-svm v1";
}

void save_svm(const SvmModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write SVM model " + path);
  out << kSvmMagic << "\tkind=" << feature_kind_name(model.kind)
      << "\tC=" << format_double(model.margin_c)
      << "\tseed=" << format_int(static_cast<int64_t>(model.seed))
      << "\tdegenerate=" << (model.degenerate ? 1 : 0)
      << "\tdegenerate_label=" << model.degenerate_label
      << "\ttrain_accuracy=" << format_double(model.train_accuracy) << "\n";
  out << "weights";
  for (double w : model.weights) out << '\t' << format_double(w);
  out << "\nbias\t" << format_double(model.bias) << "\n";
}

SvmModel load_svm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open SVM model " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kSvmMagic, 0) != 0) {
    throw DataError(path + ": missing '" + std::string(kSvmMagic) + "' header");
  }
  SvmModel model;
  model.kind = feature_kind_from_name(std::string(header_value(line, "kind")));
  model.margin_c = parse_double(header_value(line, "C"));
  model.seed = static_cast<uint64_t>(parse_int(header_value(line, "seed")));
  model.degenerate = parse_int(header_value(line, "degenerate")) != 0;
  model.degenerate_label =
      static_cast<int>(parse_int(header_value(line, "degenerate_label")));
  model.train_accuracy = parse_double(header_value(line, "train_accuracy"));

  if (!std::getline(in, line)) throw DataError(path + ": missing weights line");
  auto fields = split_fields(line, '\t');
  if (fields.empty() || fields[0] != "weights") {
    throw DataError(path + ": malformed weights line");
  }
  for (size_t i = 1; i < fields.size(); ++i) {
    model.weights.push_back(parse_double(fields[i]));
  }
  if (!std::getline(in, line)) throw DataError(path + ": missing bias line");
  fields = split_fields(line, '\t');
  if (fields.size() != 2 || fields[0] != "bias") {
    throw DataError(path + ": malformed bias line");
  }
  model.bias = parse_double(fields[1]);
  return model;
}

}  // namespace jsqa
