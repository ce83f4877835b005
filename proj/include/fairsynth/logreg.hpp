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

#ifndef FAIRSYNTH_LOGREG_HPP_
#define FAIRSYNTH_LOGREG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fairsynth/schema.hpp"

namespace fairsynth {

struct EncoderOptions {
  bool drop_first = true;    // drop each column's first category
  bool standardize = true;   // center/scale with training-set statistics
  bool include_protected = true;
};

// One-hot feature layout for a schema. The label column is never encoded as
// a feature (leakage guard); the protected attribute is included unless
// configured out.
class FeatureEncoder {
 public:
  FeatureEncoder(const Schema& schema, EncoderOptions options);

  std::size_t dim() const { return dim_; }
  const EncoderOptions& options() const { return options_; }
  const Schema& schema() const { return schema_; }

  // Learns per-feature mean/stddev from a training set. No-op when the
  // encoder does not standardize.
  void fit_standardization(const Dataset& train);

  // Dense row-major feature matrix plus labels and protected-group codes.
  struct Encoded {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<int> group;
  };
  Encoded encode(const Dataset& data) const;

 private:
  Schema schema_;
  EncoderOptions options_;
  std::size_t dim_;
  // feature j <-> (column, category) per the fixed layout
  std::vector<std::size_t> feat_column_;
  std::vector<std::uint32_t> feat_code_;
  std::vector<double> means_;
  std::vector<double> scales_;
  bool standardized_ = false;
};

struct LogRegOptions {
  double lambda = 1.0;
  std::size_t max_iters = 500;
  double tolerance = 1e-8;
  EncoderOptions encoder{};
};

struct LogRegModel {
  FeatureEncoder encoder;
  std::vector<double> params;  // d weights then the intercept
  double lambda = 0.0;
  std::size_t iterations = 0;
  double final_objective = 0.0;
  bool converged = false;
};

// Deterministic full-batch gradient descent (backtracking step rule, zero
// initialization) on mean logistic loss + (lambda/2)*||w||^2 with the
// intercept unpenalized. Stops when the gradient L2 norm drops below
// tolerance or after max_iters.
LogRegModel train_logreg(const Dataset& train, const LogRegOptions& options = {});

struct PredictionSet {
  std::vector<int> predicted;
  std::vector<int> actual;
  std::vector<int> group;
  std::size_t size() const { return predicted.size(); }
};

// Threshold at probability 0.5; exact ties classify as 1.
PredictionSet predict(const LogRegModel& model, const Dataset& test);

// Objective/gradient entry points for numeric checks on the encoded matrix.
double logreg_objective(const FeatureEncoder::Encoded& data,
                        std::span<const double> params, double lambda);
double logreg_gradient(const FeatureEncoder::Encoded& data,
                       std::span<const double> params, double lambda,
                       std::span<double> grad);

}  // namespace fairsynth

#endif  // FAIRSYNTH_LOGREG_HPP_
