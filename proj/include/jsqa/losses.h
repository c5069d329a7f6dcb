// jsqa/losses.h

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

#ifndef JSQA_LOSSES_H_
#define JSQA_LOSSES_H_

#include "jsqa/nn.h"

namespace jsqa {

// Norms are floored at this value in cosine denominators.
constexpr double kCosineNormFloor = 1e-8;

// a.b / (|a| |b|), in [-1, 1].
double cosine_similarity(const Vec& a, const Vec& b);

// Normalized temperature-scaled cross entropy over a batch of 2N vectors,
// column per clip, the two members of pair k in columns 2k and 2k+1. For an
// anchor i with positive j:
//
//   l(i,j) = -log( exp(sim(z_i, z_j)/tau) / sum_{k != i} exp(sim(z_i,z_k)/tau) )
//
// and the loss is the mean of l over all 2N anchors (each pair counted in
// both directions). When d_z is non-null it receives dLoss/dz.
double nt_xent_loss(const Mat& z, double tau, Mat* d_z = nullptr);

// Mean squared error; d_pred receives 2 (pred - target) / n.
double mse_loss(const Vec& pred, const Vec& target, Vec* d_pred = nullptr);

}  // namespace jsqa

#endif  // JSQA_LOSSES_H_
