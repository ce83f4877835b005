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

#ifndef FAIRSYNTH_MWEM_HPP_
#define FAIRSYNTH_MWEM_HPP_

#include "fairsynth/budget.hpp"
#include "fairsynth/histogram.hpp"
#include "fairsynth/marginal.hpp"

namespace fairsynth {

struct MwemOptions {
  std::size_t iterations = 10;  // T
  int workload_max_way = 2;
  std::size_t workload_cap = 512;
  // Draw exact answers and select by argmax instead of spending noise.
  // Test-mode only; the CLI keeps this off outside hidden flags.
  bool disable_noise = false;
};

// Multiplicative-weights / exponential-mechanism fit. Starting from the
// uniform histogram, each of the T rounds spends eps/(2T) to select the
// worst-approximated workload query (score |q(data) - q(dist)|, sensitivity
// 1) and eps/(2T) to measure it with Laplace(2T/eps) noise, then applies one
// multiplicative-weights step for that round's measurement only:
//   w(x) <- w(x) * exp((m - q(dist)) / (2n)) on matching cells,
// followed by renormalization.
HistogramDistribution mwem_fit(const Dataset& data, const Workload& workload,
                               double epsilon, std::size_t iterations,
                               BudgetLedger& ledger, Randomness& rng,
                               bool disable_noise = false);

// build_workload + mwem_fit + sample_synthetic. n_rows = 0 means "input
// size", matching the like-for-like substitution of synthetic for real
// training data.
Dataset mwem_synthesize(const Dataset& data, double epsilon,
                        const MwemOptions& options, BudgetLedger& ledger,
                        Randomness& rng, std::size_t n_rows = 0);

}  // namespace fairsynth

#endif  // FAIRSYNTH_MWEM_HPP_
