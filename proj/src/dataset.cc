// jsqa/dataset.cc

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

#include "jsqa/dataset.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "jsqa/errors.h"
#include "jsqa/numio.h"
#include "jsqa/resample.h"
#include "jsqa/rng.h"
#include "jsqa/wav_io.h"

namespace fs = std::filesystem;

namespace jsqa {

std::vector<MosSample> load_mos_table(const std::string& table_path) {
  std::ifstream in(table_path);
  if (!in) throw DataError("cannot open MOS table " + table_path);
  std::vector<MosSample> samples;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 2) {
      throw DataError(table_path + " line " +
                      format_int(static_cast<int64_t>(line_no)) +
                      ": expected 'path<TAB>mos'");
    }
    MosSample s;
    s.path = std::string(fields[0]);
    s.mos = parse_double(fields[1]);
    if (!(s.mos >= 1.0 && s.mos <= 5.0)) {
      throw DataError(table_path + " line " +
                      format_int(static_cast<int64_t>(line_no)) + ": MOS " +
                      format_double(s.mos) + " outside [1, 5]");
    }
    samples.push_back(std::move(s));
  }
  if (samples.empty()) {
    throw DataError(table_path + ": no samples");
  }
  return samples;
}

void save_mos_table(const std::vector<MosSample>& samples,
                    const std::string& table_path) {
  std::ofstream out(table_path, std::ios::trunc);
  if (!out) throw DataError("cannot write MOS table " + table_path);
  for (const auto& s : samples) {
    out << s.path << '\t' << format_double(s.mos) << "\n";
  }
}

MosDataset MosDataset::load(const std::string& table_path,
                            const std::string& audio_root) {
  MosDataset dataset;
  dataset.samples_ = load_mos_table(table_path);
  dataset.clips_.reserve(dataset.samples_.size());
  for (const auto& s : dataset.samples_) {
    dataset.clips_.push_back(
        normalize_for_model(load_audio((fs::path(audio_root) / s.path).string())));
  }
  return dataset;
}

std::array<std::vector<size_t>, 3> split_indices(
    size_t n, const std::array<double, 3>& ratios, uint64_t seed) {
  const double total = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(total - 1.0) > 1e-9 || ratios[0] < 0 || ratios[1] < 0 ||
      ratios[2] < 0) {
    throw UsageError("split: ratios must be nonnegative and sum to 1");
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(derive_seed(seed, 0x5B117));
  rng.shuffle(order.begin(), order.end());

  const auto c1 = static_cast<size_t>(
      std::llround(ratios[0] * static_cast<double>(n)));
  const auto c2 = static_cast<size_t>(
      std::llround((ratios[0] + ratios[1]) * static_cast<double>(n)));
  std::array<std::vector<size_t>, 3> out;
  out[0].assign(order.begin(), order.begin() + static_cast<int64_t>(c1));
  out[1].assign(order.begin() + static_cast<int64_t>(c1),
                order.begin() + static_cast<int64_t>(c2));
  out[2].assign(order.begin() + static_cast<int64_t>(c2), order.end());
  return out;
}

}  // namespace jsqa
