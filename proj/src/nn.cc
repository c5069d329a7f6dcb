// jsqa/nn.cc

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

#include "jsqa/nn.h"

#include <algorithm>
#include <cmath>

#include "jsqa/errors.h"
#include "jsqa/numio.h"

namespace jsqa {

void fan_in_uniform_init(Mat& m, int fan_in, Rng& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  double* p = m.data();
  const auto n = static_cast<size_t>(m.size());
  for (size_t i = 0; i < n; ++i) {
    p[i] = rng.uniform(-bound, bound);
  }
}

// ---------------------------------------------------------------------------
// Conv1d

Conv1d::Conv1d(int in_channels, int out_channels, int kernel, int stride)
    : in_channels_(in_channels),
      out_channels_(out_channels),
      kernel_(kernel),
      stride_(stride),
      pad_((kernel - 1) / 2) {
  weight = Mat::Zero(out_channels, in_channels * kernel);
  bias = Vec::Zero(out_channels);
  grad_weight = Mat::Zero(out_channels, in_channels * kernel);
  grad_bias = Vec::Zero(out_channels);
}

int Conv1d::out_len(int in_len) const {
  return (in_len + 2 * pad_ - kernel_) / stride_ + 1;
}

Mat Conv1d::im2col(const Mat& clip_block, int in_len) const {
  const int lout = out_len(in_len);
  Mat col = Mat::Zero(in_channels_ * kernel_, lout);
  for (int t = 0; t < lout; ++t) {
    const int start = t * stride_ - pad_;
    for (int k = 0; k < kernel_; ++k) {
      const int src = start + k;
      if (src < 0 || src >= in_len) continue;
      for (int ci = 0; ci < in_channels_; ++ci) {
        col(ci * kernel_ + k, t) = clip_block(ci, src);
      }
    }
  }
  return col;
}

FeatureMap Conv1d::forward(const FeatureMap& input) const {
  if (input.data.rows() != in_channels_) {
    throw TrainError("conv1d: expected " + format_int(in_channels_) +
                     " input channels, got " + format_int(input.data.rows()));
  }
  const int lout = out_len(input.len);
  if (lout <= 0) throw TrainError("conv1d: input too short");
  FeatureMap out;
  out.batch = input.batch;
  out.len = lout;
  out.data.resize(out_channels_, static_cast<Eigen::Index>(input.batch) * lout);
  for (int b = 0; b < input.batch; ++b) {
    const Mat col = im2col(
        input.data.middleCols(static_cast<Eigen::Index>(b) * input.len, input.len),
        input.len);
    out.data.middleCols(static_cast<Eigen::Index>(b) * lout, lout).noalias() =
        weight * col;
  }
  out.data.colwise() += bias;
  return out;
}

FeatureMap Conv1d::backward(const FeatureMap& input,
                            const FeatureMap& d_output) {
  const int lout = d_output.len;
  const int lin = input.len;
  FeatureMap d_input;
  d_input.batch = input.batch;
  d_input.len = lin;
  d_input.data = Mat::Zero(in_channels_,
                           static_cast<Eigen::Index>(input.batch) * lin);
  for (int b = 0; b < input.batch; ++b) {
    const auto dout_b =
        d_output.data.middleCols(static_cast<Eigen::Index>(b) * lout, lout);
    const Mat col = im2col(
        input.data.middleCols(static_cast<Eigen::Index>(b) * lin, lin), lin);
    grad_weight.noalias() += dout_b * col.transpose();
    grad_bias.noalias() += dout_b.rowwise().sum();
    const Mat d_col = weight.transpose() * dout_b;
    auto din_b = d_input.data.middleCols(static_cast<Eigen::Index>(b) * lin, lin);
    for (int t = 0; t < lout; ++t) {
      const int start = t * stride_ - pad_;
      for (int k = 0; k < kernel_; ++k) {
        const int dst = start + k;
        if (dst < 0 || dst >= lin) continue;
        for (int ci = 0; ci < in_channels_; ++ci) {
          din_b(ci, dst) += d_col(ci * kernel_ + k, t);
        }
      }
    }
  }
  return d_input;
}

void Conv1d::zero_grad() {
  grad_weight.setZero();
  grad_bias.setZero();
}

// ---------------------------------------------------------------------------
// BatchNorm1d

BatchNorm1d::BatchNorm1d(int channels) {
  gamma = Vec::Ones(channels);
  beta = Vec::Zero(channels);
  running_mean = Vec::Zero(channels);
  running_var = Vec::Ones(channels);
  grad_gamma = Vec::Zero(channels);
  grad_beta = Vec::Zero(channels);
}

FeatureMap BatchNorm1d::forward(const FeatureMap& input, bool train,
                                Cache* cache) {
  const auto n_cols = input.data.cols();
  FeatureMap out;
  out.batch = input.batch;
  out.len = input.len;

  Vec mean;
  Vec var;
  if (train) {
    mean = input.data.rowwise().mean();
    var = (input.data.colwise() - mean).array().square().rowwise().mean();
    const double n = static_cast<double>(n_cols);
    const double unbias = n > 1.0 ? n / (n - 1.0) : 1.0;
    running_mean = (1.0 - momentum) * running_mean + momentum * mean;
    running_var = (1.0 - momentum) * running_var + momentum * unbias * var;
  } else {
    mean = running_mean;
    var = running_var;
  }
  const Vec inv_std = (var.array() + eps).rsqrt();
  out.data = (input.data.colwise() - mean).array().colwise() *
             (gamma.array() * inv_std.array());
  out.data.colwise() += beta;
  if (cache != nullptr) {
    cache->mean = std::move(mean);
    cache->inv_std = inv_std;
  }
  return out;
}

FeatureMap BatchNorm1d::backward(const FeatureMap& input, const Cache& cache,
                                 const FeatureMap& d_output) {
  // x_hat recomputed from the cached statistics.
  const Mat x_hat = (input.data.colwise() - cache.mean).array().colwise() *
                    cache.inv_std.array();
  grad_gamma += (d_output.data.array() * x_hat.array()).rowwise().sum().matrix();
  grad_beta += d_output.data.rowwise().sum();

  const Vec mean_dy = d_output.data.rowwise().mean();
  const Vec mean_dy_xhat =
      (d_output.data.array() * x_hat.array()).rowwise().mean();

  FeatureMap d_input;
  d_input.batch = input.batch;
  d_input.len = input.len;
  d_input.data =
      ((d_output.data.colwise() - mean_dy).array() -
       x_hat.array().colwise() * mean_dy_xhat.array())
          .colwise() *
      (gamma.array() * cache.inv_std.array());
  return d_input;
}

void BatchNorm1d::zero_grad() {
  grad_gamma.setZero();
  grad_beta.setZero();
}

// ---------------------------------------------------------------------------
// Activations / pooling

void leaky_relu_inplace(Mat& x, double slope) {
  double* p = x.data();
  const auto n = static_cast<size_t>(x.size());
  for (size_t i = 0; i < n; ++i) {
    if (p[i] < 0.0) p[i] *= slope;
  }
}

void leaky_relu_backward_inplace(const Mat& output, double slope,
                                 Mat& d_output) {
  const double* y = output.data();
  double* d = d_output.data();
  const auto n = static_cast<size_t>(output.size());
  for (size_t i = 0; i < n; ++i) {
    if (y[i] < 0.0) d[i] *= slope;
  }
}

Mat global_avg_pool(const FeatureMap& input) {
  Mat out(input.data.rows(), input.batch);
  for (int b = 0; b < input.batch; ++b) {
    out.col(b) = input.data
                     .middleCols(static_cast<Eigen::Index>(b) * input.len,
                                 input.len)
                     .rowwise()
                     .mean();
  }
  return out;
}

FeatureMap global_avg_pool_backward(const Mat& d_pooled, int batch, int len) {
  FeatureMap d_input;
  d_input.batch = batch;
  d_input.len = len;
  d_input.data.resize(d_pooled.rows(), static_cast<Eigen::Index>(batch) * len);
  const double inv_len = 1.0 / static_cast<double>(len);
  for (int b = 0; b < batch; ++b) {
    d_input.data.middleCols(static_cast<Eigen::Index>(b) * len, len) =
        (d_pooled.col(b) * inv_len).replicate(1, len);
  }
  return d_input;
}

// ---------------------------------------------------------------------------
// Linear

Linear::Linear(int in_dim, int out_dim) {
  weight = Mat::Zero(out_dim, in_dim);
  bias = Vec::Zero(out_dim);
  grad_weight = Mat::Zero(out_dim, in_dim);
  grad_bias = Vec::Zero(out_dim);
}

Mat Linear::forward(const Mat& input) const {
  Mat out = weight * input;
  out.colwise() += bias;
  return out;
}

Mat Linear::backward(const Mat& input, const Mat& d_output) {
  grad_weight.noalias() += d_output * input.transpose();
  grad_bias.noalias() += d_output.rowwise().sum();
  return weight.transpose() * d_output;
}

void Linear::zero_grad() {
  grad_weight.setZero();
  grad_bias.setZero();
}

// ---------------------------------------------------------------------------
// Scaled sigmoid

namespace {
constexpr double kSigmoidClamp = 36.0;

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}
}  // namespace

double scaled_sigmoid(double x) {
  const double u = std::clamp(x, -kSigmoidClamp, kSigmoidClamp);
  return 1.0 + 4.0 * sigmoid(u);
}

double scaled_sigmoid_grad(double x) {
  if (x <= -kSigmoidClamp || x >= kSigmoidClamp) return 0.0;
  const double s = sigmoid(x);
  return 4.0 * s * (1.0 - s);
}

}  // namespace jsqa
