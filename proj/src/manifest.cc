// jsqa/manifest.cc

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

#include "jsqa/manifest.h"

#include <fstream>
#include <sstream>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

namespace {
constexpr char kMagic[] = "#jsqa-pairs v1";
}

std::string manifest_to_string(const PairManifest& manifest) {
  const PairGenConfig& cfg = manifest.config;
  std::string out;
  out += kMagic;
  out += "\tseed=" + format_int(static_cast<int64_t>(cfg.seed));
  out += "\tpairs=" + format_int(cfg.pair_count);
  out += "\tsnr_lo=" + format_double(cfg.snr_lo_db);
  out += "\tsnr_hi=" + format_double(cfg.snr_hi_db);
  out += "\twindow=" + format_double(cfg.window_width_db);
  out += "\tcrop_len=" + format_int(cfg.crop_len);
  out += "\n";
  for (const auto& r : manifest.recipes) {
    out += r.clean_id;
    out += '\t';
    out += r.noise_id;
    out += '\t';
    out += format_double(r.snr_a_db);
    out += '\t';
    out += format_double(r.snr_b_db);
    out += '\t';
    out += format_double(r.scale_m);
    out += '\t';
    out += format_double(r.scale_n);
    out += '\t';
    out += format_int(r.clean_offset);
    out += '\t';
    out += format_int(r.noise_offset);
    out += '\t';
    out += format_int(static_cast<int64_t>(r.seed));
    out += '\n';
  }
  return out;
}

PairManifest manifest_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kMagic, 0) != 0) {
    throw DataError("manifest: missing or unsupported header (expected '" +
                    std::string(kMagic) + "')");
  }
  PairManifest manifest;
  PairGenConfig& cfg = manifest.config;
  cfg.seed = static_cast<uint64_t>(parse_int(header_value(line, "seed")));
  cfg.pair_count = parse_int(header_value(line, "pairs"));
  cfg.snr_lo_db = parse_double(header_value(line, "snr_lo"));
  cfg.snr_hi_db = parse_double(header_value(line, "snr_hi"));
  cfg.window_width_db = parse_double(header_value(line, "window"));
  cfg.crop_len = parse_int(header_value(line, "crop_len"));

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 9) {
      throw DataError("manifest line " + format_int(static_cast<int64_t>(line_no)) +
                      ": expected 9 fields, got " +
                      format_int(static_cast<int64_t>(fields.size())));
    }
    JndPairRecipe r;
    r.clean_id = std::string(fields[0]);
    r.noise_id = std::string(fields[1]);
    r.snr_a_db = parse_double(fields[2]);
    r.snr_b_db = parse_double(fields[3]);
    r.scale_m = parse_double(fields[4]);
    r.scale_n = parse_double(fields[5]);
    r.clean_offset = parse_int(fields[6]);
    r.noise_offset = parse_int(fields[7]);
    r.seed = static_cast<uint64_t>(parse_int(fields[8]));
    manifest.recipes.push_back(std::move(r));
  }
  if (static_cast<int64_t>(manifest.recipes.size()) != cfg.pair_count) {
    throw DataError("manifest: header says " + format_int(cfg.pair_count) +
                    " pairs, file has " +
                    format_int(static_cast<int64_t>(manifest.recipes.size())));
  }
  return manifest;
}

void save_manifest(const PairManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("manifest: cannot write " + path);
  const std::string text = manifest_to_string(manifest);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("manifest: write failed for " + path);
}

PairManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("manifest: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return manifest_from_string(buf.str());
}

}  // namespace jsqa
