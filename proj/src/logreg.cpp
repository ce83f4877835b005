// Copyright 2026 The fairsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairsynth/logreg.hpp"

#include <cmath>

#include "fairsynth/kernels.hpp"
#include "fairsynth/parallel.hpp"

namespace fairsynth {

FeatureEncoder::FeatureEncoder(const Schema& schema, EncoderOptions options)
    : schema_(schema), options_(options) {
  for (std::size_t c = 0; c < schema_.column_count(); ++c) {
    if (c == schema_.label()) continue;  // never a feature
    if (!options_.include_protected && c == schema_.protected_attr()) continue;
    const std::uint32_t card = schema_.columns()[c].cardinality;
    for (std::uint32_t code = options_.drop_first ? 1u : 0u; code < card;
         ++code) {
      feat_column_.push_back(c);
      feat_code_.push_back(code);
    }
  }
  dim_ = feat_column_.size();
  means_.assign(dim_, 0.0);
  scales_.assign(dim_, 1.0);
}

void FeatureEncoder::fit_standardization(const Dataset& train) {
  if (!options_.standardize) return;
  if (train.row_count() == 0) throw Error("encoder: empty training set");
  const double n = static_cast<double>(train.row_count());
  std::vector<double> mean(dim_, 0.0), sq(dim_, 0.0);
  for (std::size_t i = 0; i < train.row_count(); ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const double v =
          train.at(i, feat_column_[j]) == feat_code_[j] ? 1.0 : 0.0;
      mean[j] += v;
      sq[j] += v * v;
    }
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    mean[j] /= n;
    const double var = sq[j] / n - mean[j] * mean[j];
    means_[j] = mean[j];
    // Constant features carry no signal; leave them unscaled to avoid 0/0.
    scales_[j] = var > 1e-12 ? std::sqrt(var) : 1.0;
  }
  standardized_ = true;
}

FeatureEncoder::Encoded FeatureEncoder::encode(const Dataset& data) const {
  if (!(data.schema() == schema_)) {
    throw Error("encoder: dataset schema does not match the encoder");
  }
  if (options_.standardize && !standardized_) {
    throw Error("encoder: standardization statistics not fitted");
  }
  Encoded out;
  out.n = data.row_count();
  out.d = dim_;
  out.x.resize(out.n * dim_);
  out.y.resize(out.n);
  out.group.resize(out.n);
  const std::size_t y_col = schema_.label();
  const std::size_t a_col = schema_.protected_attr();
  for (std::size_t i = 0; i < out.n; ++i) {
    double* row = out.x.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      double v = data.at(i, feat_column_[j]) == feat_code_[j] ? 1.0 : 0.0;
      if (options_.standardize) v = (v - means_[j]) / scales_[j];
      row[j] = v;
    }
    out.y[i] = static_cast<double>(data.at(i, y_col));
    out.group[i] = static_cast<int>(data.at(i, a_col));
  }
  return out;
}

double logreg_objective(const FeatureEncoder::Encoded& data,
                        std::span<const double> params, double lambda) {
  std::vector<double> scratch(params.size());
  return kernels::logreg_objective_gradient(data.x, data.n, data.d, data.y,
                                            params, lambda, scratch);
}

double logreg_gradient(const FeatureEncoder::Encoded& data,
                       std::span<const double> params, double lambda,
                       std::span<double> grad) {
  return kernels::logreg_objective_gradient(data.x, data.n, data.d, data.y,
                                            params, lambda, grad);
}

namespace {

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_both_classes(const Dataset& train) {
  const std::size_t y_col = train.schema().label();
  bool has0 = false, has1 = false;
  for (std::size_t i = 0; i < train.row_count(); ++i) {
    (train.at(i, y_col) == 0 ? has0 : has1) = true;
  }
  if (!has0 || !has1) {
    throw Error("train_logreg: training labels contain a single class");
  }
}

}  // namespace

LogRegModel train_logreg(const Dataset& train, const LogRegOptions& options) {
  if (train.row_count() == 0) throw Error("train_logreg: empty training set");
  if (options.lambda < 0.0) throw Error("train_logreg: lambda must be >= 0");
  check_both_classes(train);

  FeatureEncoder encoder(train.schema(), options.encoder);
  encoder.fit_standardization(train);
  const FeatureEncoder::Encoded data = encoder.encode(train);

  std::vector<double> params(data.d + 1, 0.0);
  std::vector<double> grad(data.d + 1, 0.0);
  std::vector<double> trial(data.d + 1, 0.0);
  std::vector<double> trial_grad(data.d + 1, 0.0);

  double objective = logreg_gradient(data, params, options.lambda, grad);
  std::size_t iters = 0;
  bool converged = l2_norm(grad) < options.tolerance;

  // Backtracking gradient descent: start each iteration at unit step and
  // halve until the objective decreases (Armijo, c = 1e-4). Every accepted
  // step strictly lowers the objective, which the tests assert.
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxHalvings = 60;
  while (!converged && iters < options.max_iters) {
    const double g2 = l2_norm(grad);
    double step = 1.0;
    double new_objective = objective;
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h) {
      for (std::size_t j = 0; j < params.size(); ++j) {
        trial[j] = params[j] - step * grad[j];
      }
      new_objective =
          logreg_gradient(data, trial, options.lambda, trial_grad);
      if (new_objective <= objective - kArmijo * step * g2 * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no descent step found at float resolution
    params.swap(trial);
    grad.swap(trial_grad);
    objective = new_objective;
    ++iters;
    converged = l2_norm(grad) < options.tolerance;
  }

  LogRegModel model{std::move(encoder), std::move(params), options.lambda,
                    iters, objective, converged};
  return model;
}

PredictionSet predict(const LogRegModel& model, const Dataset& test) {
  const FeatureEncoder::Encoded data = model.encoder.encode(test);
  PredictionSet out;
  out.predicted.resize(data.n);
  out.actual.resize(data.n);
  out.group.resize(data.n);
  const std::size_t d = data.d;
  for (std::size_t i = 0; i < data.n; ++i) {
    const double* row = data.x.data() + i * d;
    double z = model.params[d];
    for (std::size_t j = 0; j < d; ++j) z += row[j] * model.params[j];
    // sigma(z) >= 0.5 iff z >= 0; ties at exactly 0.5 go to class 1.
    out.predicted[i] = z >= 0.0 ? 1 : 0;
    out.actual[i] = static_cast<int>(data.y[i]);
    out.group[i] = data.group[i];
  }
  return out;
}

}  // namespace fairsynth
