// jsqa/nn.h

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

#ifndef JSQA_NN_H_
#define JSQA_NN_H_

#include <Eigen/Dense>

#include "jsqa/rng.h"

namespace jsqa {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Batched 1-D feature map: channels x (batch * len), column-major; the
// column for time t of clip b sits at index b * len + t. Convolutions never
// mix content across the per-clip segments.
struct FeatureMap {
  Mat data;
  int batch = 0;
  int len = 0;
};

// Fills a matrix/vector with U(-a, a), a = 1 / sqrt(fan_in), in storage
// order; the draw order is part of the init determinism contract.
void fan_in_uniform_init(Mat& m, int fan_in, Rng& rng);

// 1-D convolution with 'same' zero padding: out_len = floor((len-1)/stride)+1.
// Runs as im2col + GEMM per clip.
class Conv1d {
 public:
  Conv1d(int in_channels, int out_channels, int kernel, int stride);

  FeatureMap forward(const FeatureMap& input) const;
  // Accumulates weight/bias grads; returns d(input). Needs the forward input.
  FeatureMap backward(const FeatureMap& input, const FeatureMap& d_output);

  int out_len(int in_len) const;
  void zero_grad();

  int in_channels() const { return in_channels_; }
  int out_channels() const { return out_channels_; }
  int kernel() const { return kernel_; }
  int stride() const { return stride_; }

  Mat weight;  // out_channels x (in_channels * kernel)
  Vec bias;
  Mat grad_weight;
  Vec grad_bias;

 private:
  Mat im2col(const Mat& clip_block, int in_len) const;

  int in_channels_;
  int out_channels_;
  int kernel_;
  int stride_;
  int pad_;
};

// Per-channel batch normalization over batch x time. Training mode uses
// batch statistics and updates the running estimates; eval mode uses the
// running estimates, which makes each clip independent of its batch.
class BatchNorm1d {
 public:
  explicit BatchNorm1d(int channels);

  struct Cache {
    Vec mean;
    Vec inv_std;
  };

  FeatureMap forward(const FeatureMap& input, bool train, Cache* cache);
  // Training-mode gradient; needs the forward input and its cache.
  FeatureMap backward(const FeatureMap& input, const Cache& cache,
                      const FeatureMap& d_output);

  void zero_grad();
  int channels() const { return static_cast<int>(gamma.size()); }

  Vec gamma;
  Vec beta;
  Vec running_mean;
  Vec running_var;
  Vec grad_gamma;
  Vec grad_beta;

  double momentum = 0.1;
  double eps = 1e-5;
};

void leaky_relu_inplace(Mat& x, double slope);
// Mask recovered from the forward output: y > 0 iff x > 0 for slope in (0,1).
void leaky_relu_backward_inplace(const Mat& output, double slope, Mat& d_output);

// Mean over each clip's time axis: feature map -> channels x batch.
Mat global_avg_pool(const FeatureMap& input);
FeatureMap global_avg_pool_backward(const Mat& d_pooled, int batch, int len);

// Dense layer over column-per-sample matrices: y = W x + b.
class Linear {
 public:
  Linear(int in_dim, int out_dim);

  Mat forward(const Mat& input) const;
  Mat backward(const Mat& input, const Mat& d_output);

  void zero_grad();
  int in_dim() const { return static_cast<int>(weight.cols()); }
  int out_dim() const { return static_cast<int>(weight.rows()); }

  Mat weight;
  Vec bias;
  Mat grad_weight;
  Vec grad_bias;
};

// 1 + 4*sigma(x), pre-activation clamped to +/-36 so the result stays
// strictly inside (1, 5) in double precision.
double scaled_sigmoid(double x);
double scaled_sigmoid_grad(double x);

}  // namespace jsqa

#endif  // JSQA_NN_H_
