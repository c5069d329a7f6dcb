// jsqa/jnd_features.cc

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

#include "jsqa/jnd_features.h"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jsqa/errors.h"
#include "jsqa/numio.h"
#include "jsqa/si_sdr.h"
#include "jsqa/wav_io.h"

namespace fs = std::filesystem;

namespace jsqa {

std::string feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kPesq:
      return "pesq";
    case FeatureKind::kSiSdr:
      return "si_sdr";
    case FeatureKind::kBoth:
      return "both";
  }
  throw UsageError("unknown feature kind");
}

FeatureKind feature_kind_from_name(const std::string& name) {
  if (name == "pesq") return FeatureKind::kPesq;
  if (name == "si_sdr") return FeatureKind::kSiSdr;
  if (name == "both") return FeatureKind::kBoth;
  throw UsageError("unknown feature kind '" + name +
                   "' (expected pesq, si_sdr or both)");
}

int feature_dim(FeatureKind kind) {
  return kind == FeatureKind::kBoth ? 2 : 1;
}

CommandPesqScorer::CommandPesqScorer(std::string command_template)
    : command_template_(std::move(command_template)) {
  if (command_template_.find("{ref}") == std::string::npos ||
      command_template_.find("{deg}") == std::string::npos) {
    throw UsageError(
        "PESQ command template must contain {ref} and {deg} placeholders");
  }
}

namespace {

std::string substitute(std::string text, const std::string& key,
                       const std::string& value) {
  size_t pos;
  while ((pos = text.find(key)) != std::string::npos) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

// Unique scratch names; scorers may run from several worker threads.
std::string scratch_wav(const char* tag) {
  static std::atomic<uint64_t> counter{0};
  const uint64_t id = counter.fetch_add(1);
  return (fs::temp_directory_path() /
          ("jsqa_pesq_" + std::to_string(::getpid()) + "_" +
           std::to_string(id) + "_" + tag + ".wav"))
      .string();
}

}  // namespace

double CommandPesqScorer::score(const AudioClip& reference,
                                const AudioClip& degraded) {
  const std::string ref_path = scratch_wav("ref");
  const std::string deg_path = scratch_wav("deg");
  save_audio(reference, ref_path);
  save_audio(degraded, deg_path);

  const std::string command = substitute(
      substitute(command_template_, "{ref}", "'" + ref_path + "'"), "{deg}",
      "'" + deg_path + "'");

  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    fs::remove(ref_path);
    fs::remove(deg_path);
    throw DataError("PESQ command failed to start: " + command);
  }
  char buf[256];
  while (fgets(buf, sizeof(buf), pipe) != nullptr) output += buf;
  const int status = pclose(pipe);
  fs::remove(ref_path);
  fs::remove(deg_path);
  if (status != 0) {
    throw DataError("PESQ command exited with status " +
                    format_int(status) + ": " + command);
  }

  // Last number on stdout wins; tools tend to print banners first.
  std::istringstream in(output);
  std::string token;
  double value = 0.0;
  bool found = false;
  while (in >> token) {
    try {
      value = parse_double(token);
      found = true;
    } catch (const DataError&) {
    }
  }
  if (!found) {
    throw DataError("PESQ command produced no numeric output: " + command);
  }
  return value;
}

PairFeature extract_pair_feature(const AudioClip& clip_hi,
                                 const AudioClip& clip_lo, FeatureKind kind,
                                 PesqScorer* pesq) {
  if ((kind == FeatureKind::kPesq || kind == FeatureKind::kBoth) &&
      pesq == nullptr) {
    throw UsageError("feature kind '" + feature_kind_name(kind) +
                     "' requires a PESQ scorer, none configured");
  }
  PairFeature feature;
  feature.kind = kind;
  if (kind == FeatureKind::kPesq || kind == FeatureKind::kBoth) {
    feature.values.push_back(pesq->score(clip_hi, clip_lo));
  }
  if (kind == FeatureKind::kSiSdr || kind == FeatureKind::kBoth) {
    const double value = si_sdr(clip_hi, clip_lo);
    feature.values.push_back(std::isinf(value) ? kSiSdrFeatureCap : value);
  }
  for (double v : feature.values) {
    if (!std::isfinite(v)) {
      throw DataError("pair feature is non-finite");
    }
  }
  return feature;
}

namespace {
constexpr char kFeatMagic[] = "#jsqa-jnd-features v1";
}

LabeledFeatures load_labeled_features(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open feature file " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kFeatMagic, 0) != 0) {
    throw DataError(path + ": missing '" + std::string(kFeatMagic) +
                    "' header");
  }
  LabeledFeatures data;
  data.kind = feature_kind_from_name(std::string(header_value(line, "kind")));
  const int dim = feature_dim(data.kind);
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line, '\t');
    if (static_cast<int>(fields.size()) != dim + 1) {
      throw DataError(path + " line " +
                      format_int(static_cast<int64_t>(line_no)) +
                      ": expected " + format_int(dim + 1) + " fields");
    }
    PairFeature f;
    f.kind = data.kind;
    for (int i = 0; i < dim; ++i) f.values.push_back(parse_double(fields[i]));
    const auto label = fields[dim];
    if (label == "within") {
      data.labels.push_back(+1);
    } else if (label == "beyond") {
      data.labels.push_back(-1);
    } else {
      throw DataError(path + " line " +
                      format_int(static_cast<int64_t>(line_no)) +
                      ": label must be 'within' or 'beyond'");
    }
    data.features.push_back(std::move(f));
  }
  return data;
}

void save_labeled_features(const LabeledFeatures& data,
                           const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write feature file " + path);
  out << kFeatMagic << "\tkind=" << feature_kind_name(data.kind) << "\n";
  for (size_t i = 0; i < data.features.size(); ++i) {
    for (double v : data.features[i].values) out << format_double(v) << '\t';
    out << (data.labels[i] > 0 ? "within" : "beyond") << "\n";
  }
}

}  // namespace jsqa
