// jsqa/losses.cc

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

#include "jsqa/losses.h"

#include <cmath>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

double cosine_similarity(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw TrainError("cosine_similarity: dimension mismatch");
  }
  const double na = std::max(a.norm(), kCosineNormFloor);
  const double nb = std::max(b.norm(), kCosineNormFloor);
  return a.dot(b) / (na * nb);
}

double nt_xent_loss(const Mat& z, double tau, Mat* d_z) {
  const auto m = z.cols();  // 2N clips
  if (m < 4 || m % 2 != 0) {
    throw TrainError("nt_xent_loss: batch must hold an even number of clips, "
                     ">= 4; got " + format_int(static_cast<int64_t>(m)));
  }
  if (tau <= 0.0) throw TrainError("nt_xent_loss: temperature must be positive");
  if (!z.allFinite()) throw TrainError("nt_xent_loss: non-finite embeddings");

  // Row-normalized copies; norms floored so zero vectors stay defined.
  Vec norms(m);
  std::vector<bool> floored(static_cast<size_t>(m), false);
  Mat z_hat(z.rows(), m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double n = z.col(i).norm();
    if (n < kCosineNormFloor) {
      norms[i] = kCosineNormFloor;
      floored[static_cast<size_t>(i)] = true;
    } else {
      norms[i] = n;
    }
    z_hat.col(i) = z.col(i) / norms[i];
  }
  const Mat sim = z_hat.transpose() * z_hat;

  double loss = 0.0;
  // g(i, k) = dLoss / dsim(i, k), anchors along rows.
  Mat g = d_z != nullptr ? Mat::Zero(m, m) : Mat();
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index j = i ^ 1;  // pair partner
    double max_logit = -1e300;
    for (Eigen::Index k = 0; k < m; ++k) {
      if (k == i) continue;
      max_logit = std::max(max_logit, sim(i, k) / tau);
    }
    double denom = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
      if (k == i) continue;
      denom += std::exp(sim(i, k) / tau - max_logit);
    }
    const double lse = max_logit + std::log(denom);
    loss += lse - sim(i, j) / tau;
    if (d_z != nullptr) {
      const double scale = 1.0 / (tau * static_cast<double>(m));
      for (Eigen::Index k = 0; k < m; ++k) {
        if (k == i) continue;
        const double p = std::exp(sim(i, k) / tau - max_logit) / denom;
        g(i, k) = scale * (p - (k == j ? 1.0 : 0.0));
      }
    }
  }
  loss /= static_cast<double>(m);

  if (d_z != nullptr) {
    // sim is symmetric in its two arguments: fold both anchor directions.
    const Mat g_sym = g + g.transpose();
    const Mat d_hat = z_hat * g_sym;  // dLoss/dz_hat, column per clip
    d_z->resize(z.rows(), m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (floored[static_cast<size_t>(i)]) {
        // Below the floor the normalizer is constant.
        d_z->col(i) = d_hat.col(i) / norms[i];
      } else {
        const double radial = z_hat.col(i).dot(d_hat.col(i));
        d_z->col(i) =
            (d_hat.col(i) - z_hat.col(i) * radial) / norms[i];
      }
    }
  }
  return loss;
}

double mse_loss(const Vec& pred, const Vec& target, Vec* d_pred) {
  if (pred.size() != target.size() || pred.size() == 0) {
    throw TrainError("mse_loss: size mismatch or empty input");
  }
  const Vec diff = pred - target;
  const double n = static_cast<double>(pred.size());
  if (d_pred != nullptr) {
    *d_pred = 2.0 * diff / n;
  }
  return diff.squaredNorm() / n;
}

}  // namespace jsqa
