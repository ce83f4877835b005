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

#include "fairsynth/quail.hpp"

#include <cmath>

namespace fairsynth {

DPClassifier train_dp_logreg(const Dataset& data, double epsilon,
                             double lambda, BudgetLedger& ledger,
                             Randomness& rng, bool disable_noise) {
  if (data.row_count() == 0) throw Error("train_dp_logreg: empty dataset");
  if (!(lambda > 0.0)) throw Error("train_dp_logreg: lambda must be > 0");
  if (!(epsilon > 0.0)) throw Error("train_dp_logreg: epsilon must be > 0");
  ledger.spend("dp-logreg", Budget(epsilon, 0.0));

  LogRegOptions options;
  options.lambda = lambda;
  options.encoder.drop_first = false;
  options.encoder.standardize = false;
  LogRegModel model = train_logreg(data, options);

  if (!disable_noise) {
    // Output perturbation: regularized-ERM sensitivity 2/(n*lambda) on
    // unit-max-norm one-hot features, epsilon split evenly per coordinate.
    const double n = static_cast<double>(data.row_count());
    const double eps_coord =
        epsilon / static_cast<double>(model.params.size());
    const double scale = 2.0 / (n * lambda * eps_coord);
    for (double& p : model.params) p += rng.laplace(scale);
  }
  return DPClassifier{std::move(model.encoder), std::move(model.params),
                      epsilon};
}

std::vector<int> dp_predict(const DPClassifier& classifier,
                            const Dataset& data) {
  const FeatureEncoder::Encoded enc = classifier.encoder.encode(data);
  std::vector<int> labels(enc.n);
  const std::size_t d = enc.d;
  for (std::size_t i = 0; i < enc.n; ++i) {
    const double* row = enc.x.data() + i * d;
    double z = classifier.params[d];
    for (std::size_t j = 0; j < d; ++j) z += row[j] * classifier.params[j];
    labels[i] = z >= 0.0 ? 1 : 0;
  }
  return labels;
}

Schema drop_label_schema(const Schema& schema) {
  const std::size_t label = schema.label();
  std::vector<Column> cols;
  cols.reserve(schema.column_count() - 1);
  for (std::size_t c = 0; c < schema.column_count(); ++c) {
    if (c != label) cols.push_back(schema.columns()[c]);
  }
  return Schema(std::move(cols));
}

Dataset drop_label_column(const Dataset& data) {
  const Schema& schema = data.schema();
  const std::size_t label = schema.label();
  const std::size_t k = schema.column_count();
  std::vector<std::uint32_t> flat;
  flat.reserve(data.row_count() * (k - 1));
  for (std::size_t i = 0; i < data.row_count(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      if (c != label) flat.push_back(data.at(i, c));
    }
  }
  std::vector<std::string> lineage = data.lineage();
  lineage.push_back("label-dropped");
  return Dataset(drop_label_schema(schema), std::move(flat),
                 std::move(lineage));
}

Dataset quail_synthesize(const Dataset& data, const SynthFn& base_synth,
                         double epsilon, const QuailConfig& config,
                         BudgetLedger& ledger, Randomness& rng) {
  if (!(config.synth_fraction > 0.0 && config.synth_fraction < 1.0)) {
    throw Error("quail: synth_fraction must lie in (0, 1)");
  }
  if (!(epsilon > 0.0)) throw Error("quail: epsilon must be > 0");
  const double eps_classifier = epsilon * config.classifier_fraction();
  const double eps_synth = epsilon * config.synth_fraction;

  // The parent ledger sees exactly two entries; the stages run against
  // scratch ledgers capped at their share, so an internal overspend is still
  // caught.
  ledger.spend("quail/classifier", Budget(eps_classifier, 0.0));
  BudgetLedger classifier_ledger(Budget(eps_classifier, 0.0));
  const DPClassifier classifier =
      train_dp_logreg(data, eps_classifier, config.lambda, classifier_ledger,
                      rng, config.disable_noise);

  ledger.spend("quail/synthesizer", Budget(eps_synth, 0.0));
  BudgetLedger synth_ledger(Budget(eps_synth, 0.0));
  const Dataset features = drop_label_column(data);
  const Dataset synth_features =
      base_synth(features, eps_synth, synth_ledger, rng);

  // Reassemble full-schema rows with a placeholder label, predict, relabel.
  const Schema& schema = data.schema();
  const std::size_t label = schema.label();
  const std::size_t k = schema.column_count();
  std::vector<std::uint32_t> flat;
  flat.reserve(synth_features.row_count() * k);
  for (std::size_t i = 0; i < synth_features.row_count(); ++i) {
    std::size_t fc = 0;
    for (std::size_t c = 0; c < k; ++c) {
      flat.push_back(c == label ? 0u : synth_features.at(i, fc++));
    }
  }
  Dataset assembled(schema, std::move(flat), {"synthetic"});
  const std::vector<int> labels = dp_predict(classifier, assembled);

  std::vector<std::uint32_t> labeled(assembled.flat().begin(),
                                     assembled.flat().end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labeled[i * k + label] = static_cast<std::uint32_t>(labels[i]);
  }
  return Dataset(schema, std::move(labeled), {"synthetic"});
}

}  // namespace fairsynth
