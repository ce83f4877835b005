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

#ifndef FAIRSYNTH_HISTOGRAM_HPP_
#define FAIRSYNTH_HISTOGRAM_HPP_

#include <span>
#include <vector>

#include "fairsynth/marginal.hpp"
#include "fairsynth/rng.hpp"
#include "fairsynth/schema.hpp"

namespace fairsynth {

// Explicit probability vector over the full product domain. The MWEM
// synthesizer's internal state; kept normalized after every update.
class HistogramDistribution {
 public:
  explicit HistogramDistribution(Schema schema);  // uniform start

  const Schema& schema() const { return schema_; }
  std::span<const double> weights() const { return weights_; }

  // Total probability mass of the cells matching q.
  double query_mass(const MarginalQuery& q) const;

  // Multiplies matching cells by exp(log_factor) then renormalizes.
  void multiplicative_update(const MarginalQuery& q, double log_factor);

  void normalize();
  double max_weight_error() const;  // |1 - sum|, for invariant checks

 private:
  Schema schema_;
  std::vector<double> weights_;
};

// Expected count n * mass(q) under the distribution.
double evaluate_query_on_dist(const MarginalQuery& q,
                              const HistogramDistribution& dist,
                              std::size_t n);

// n_rows i.i.d. draws from the histogram, decoded to code vectors.
Dataset sample_synthetic(const HistogramDistribution& dist,
                         std::size_t n_rows, Randomness& rng);

}  // namespace fairsynth

#endif  // FAIRSYNTH_HISTOGRAM_HPP_
