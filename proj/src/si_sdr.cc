// jsqa/si_sdr.cc

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

#include "jsqa/si_sdr.h"

#include <cmath>
#include <limits>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

double si_sdr(const AudioClip& reference, const AudioClip& estimate) {
  if (reference.length() != estimate.length()) {
    throw DataError("si_sdr: length mismatch (" +
                    format_int(reference.length()) + " vs " +
                    format_int(estimate.length()) + ")");
  }
  if (reference.samples.empty()) {
    throw DataError("si_sdr: empty signals");
  }
  double ref_energy = 0.0;
  double dot = 0.0;
  for (size_t i = 0; i < reference.samples.size(); ++i) {
    ref_energy += reference.samples[i] * reference.samples[i];
    dot += estimate.samples[i] * reference.samples[i];
  }
  if (ref_energy <= 0.0) {
    throw DataError("si_sdr: zero-energy reference");
  }
  const double alpha = dot / ref_energy;
  double target_energy = 0.0;
  double residual_energy = 0.0;
  for (size_t i = 0; i < reference.samples.size(); ++i) {
    const double target = alpha * reference.samples[i];
    const double residual = estimate.samples[i] - target;
    target_energy += target * target;
    residual_energy += residual * residual;
  }
  if (residual_energy <= target_energy * 1e-25) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(target_energy / residual_energy);
}

}  // namespace jsqa
