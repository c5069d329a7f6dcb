// jsqa/manifest.h

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

#ifndef JSQA_MANIFEST_H_
#define JSQA_MANIFEST_H_

#include <iosfwd>
#include <string>

#include "jsqa/pairgen.h"

namespace jsqa {

// Line-delimited manifest, format version 1.
//
//   #jsqa-pairs v1<TAB>seed=..<TAB>pairs=..<TAB>snr_lo=..<TAB>snr_hi=..
//       <TAB>window=..<TAB>crop_len=..
//   clean_id<TAB>noise_id<TAB>snr_a<TAB>snr_b<TAB>scale_m<TAB>scale_n
//       <TAB>clean_off<TAB>noise_off<TAB>seed
//
// Doubles are written in shortest round-trip form, so writing, reading and
// writing again is byte-identical.
std::string manifest_to_string(const PairManifest& manifest);
PairManifest manifest_from_string(const std::string& text);

void save_manifest(const PairManifest& manifest, const std::string& path);
PairManifest load_manifest(const std::string& path);

}  // namespace jsqa

#endif  // JSQA_MANIFEST_H_
