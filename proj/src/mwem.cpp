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

#include "fairsynth/mwem.hpp"

#include <cmath>

#include "fairsynth/mechanisms.hpp"

namespace fairsynth {

HistogramDistribution mwem_fit(const Dataset& data, const Workload& workload,
                               double epsilon, std::size_t iterations,
                               BudgetLedger& ledger, Randomness& rng,
                               bool disable_noise) {
  if (workload.queries.empty()) throw Error("mwem_fit: empty workload");
  if (iterations < 1) throw Error("mwem_fit: iterations must be >= 1");
  if (!(epsilon > 0.0)) throw Error("mwem_fit: epsilon must be > 0");
  for (const MarginalQuery& q : workload.queries) {
    validate_query(q, data.schema());
  }

  const std::size_t n = data.row_count();
  const double n_d = static_cast<double>(n);
  const double eps_round = epsilon / (2.0 * static_cast<double>(iterations));

  // True answers never change; compute them once.
  std::vector<double> truth(workload.queries.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    truth[i] = static_cast<double>(evaluate_query(workload.queries[i], data));
  }

  HistogramDistribution dist(data.schema());
  std::vector<double> scores(workload.queries.size());
  for (std::size_t t = 0; t < iterations; ++t) {
    std::vector<double> answers(workload.queries.size());
    for (std::size_t i = 0; i < answers.size(); ++i) {
      answers[i] = n_d * dist.query_mass(workload.queries[i]);
      scores[i] = std::abs(truth[i] - answers[i]);
    }

    ledger.spend(detail::concat("mwem/select[", t, "]"),
                 Budget(eps_round, 0.0));
    const std::size_t pick =
        disable_noise ? argmax_select(scores)
                      : exponential_select(scores, 1.0, eps_round, rng);

    ledger.spend(detail::concat("mwem/measure[", t, "]"),
                 Budget(eps_round, 0.0));
    const double measured =
        truth[pick] +
        (disable_noise ? 0.0 : laplace_noise(1.0, eps_round, rng));

    const double log_factor = (measured - answers[pick]) / (2.0 * n_d);
    dist.multiplicative_update(workload.queries[pick], log_factor);
    if (dist.max_weight_error() > 1e-9) {
      throw Error("mwem_fit: histogram lost normalization");
    }
  }
  return dist;
}

Dataset mwem_synthesize(const Dataset& data, double epsilon,
                        const MwemOptions& options, BudgetLedger& ledger,
                        Randomness& rng, std::size_t n_rows) {
  Workload workload = build_workload(data.schema(), options.workload_max_way,
                                     rng, options.workload_cap);
  HistogramDistribution dist =
      mwem_fit(data, workload, epsilon, options.iterations, ledger, rng,
               options.disable_noise);
  const std::size_t rows = n_rows == 0 ? data.row_count() : n_rows;
  return sample_synthetic(dist, rows, rng);
}

}  // namespace fairsynth
