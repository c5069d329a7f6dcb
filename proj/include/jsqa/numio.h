// jsqa/numio.h

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

#ifndef JSQA_NUMIO_H_
#define JSQA_NUMIO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jsqa {

// Locale-independent numeric text. format_double emits the shortest form
// that parses back to the identical bits, which is what makes manifests and
// reports byte-stable across reruns.
std::string format_double(double v);
double parse_double(std::string_view s);

std::string format_int(int64_t v);
int64_t parse_int(std::string_view s);
uint64_t parse_uint(std::string_view s);

std::vector<std::string_view> split_fields(std::string_view line, char sep);

// key=value helpers for header lines and flat config blocks.
std::string_view header_value(std::string_view header, std::string_view key);

}  // namespace jsqa

#endif  // JSQA_NUMIO_H_
