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

#ifndef FAIRSYNTH_QUAIL_HPP_
#define FAIRSYNTH_QUAIL_HPP_

#include <functional>

#include "fairsynth/budget.hpp"
#include "fairsynth/logreg.hpp"
#include "fairsynth/rng.hpp"
#include "fairsynth/schema.hpp"

namespace fairsynth {

// Logistic-regression classifier made private by output perturbation:
// train the regularized model, then add per-coordinate Laplace noise with
// scale 2/(n * lambda * eps_coord), eps_coord = epsilon / (d + 1). Features
// are plain one-hot (no category dropped, no standardization), so the
// parameter count is the summed feature cardinalities plus the intercept.
struct DPClassifier {
  FeatureEncoder encoder;
  std::vector<double> params;  // d weights then the intercept
  double epsilon_used = 0.0;
};

DPClassifier train_dp_logreg(const Dataset& data, double epsilon,
                             double lambda, BudgetLedger& ledger,
                             Randomness& rng, bool disable_noise = false);

// Hard labels (probability >= 0.5 -> 1) on a full-schema dataset; the label
// column of the input is ignored.
std::vector<int> dp_predict(const DPClassifier& classifier,
                            const Dataset& data);

struct QuailConfig {
  double synth_fraction = 0.5;  // share of epsilon for the base synthesizer
  double lambda = 1.0;
  bool disable_noise = false;

  double classifier_fraction() const { return 1.0 - synth_fraction; }
};

// Base synthesizer handle: consumes the feature-only dataset and its epsilon
// share, spending through the supplied ledger.
using SynthFn = std::function<Dataset(const Dataset&, double, BudgetLedger&,
                                      Randomness&)>;

// Schema/dataset with the label column removed (protected index adjusted).
Schema drop_label_schema(const Schema& schema);
Dataset drop_label_column(const Dataset& data);

// QUAIL ensemble: (i) DP classifier on the full data at
// epsilon * classifier_fraction, (ii) base synthesizer on the label-free
// data at epsilon * synth_fraction, (iii) every synthetic row labeled with
// the classifier's hard prediction. The ledger receives exactly two labeled
// entries summing to epsilon.
Dataset quail_synthesize(const Dataset& data, const SynthFn& base_synth,
                         double epsilon, const QuailConfig& config,
                         BudgetLedger& ledger, Randomness& rng);

}  // namespace fairsynth

#endif  // FAIRSYNTH_QUAIL_HPP_
