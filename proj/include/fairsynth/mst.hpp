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

#ifndef FAIRSYNTH_MST_HPP_
#define FAIRSYNTH_MST_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "fairsynth/budget.hpp"
#include "fairsynth/rng.hpp"
#include "fairsynth/schema.hpp"

namespace fairsynth {

// A 1- or 2-way contingency vector measured under Gaussian noise, after
// projection back to the non-negative scaled simplex (clip at zero, rescale
// to n). Projection is post-processing and never touches the ledger.
struct NoisyMarginal {
  std::vector<std::size_t> columns;  // length 1 or 2, strictly increasing
  std::vector<double> counts;        // row-major over the sub-domain
  double sigma = 0.0;
};

// Tree-factored distribution over the schema domain:
//   P(x) = prod_v P(x_v) * prod_(u,v) P(x_u, x_v) / (P(x_u) P(x_v)).
// Edge marginals are calibrated so their 1-way projections agree with the
// node marginals; a spanning forest is allowed.
struct TreeModel {
  Schema schema;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v
  std::vector<NoisyMarginal> node_marginals;               // one per column
  std::vector<NoisyMarginal> edge_marginals;               // aligned w/ edges
  double total = 0.0;                                      // row mass n
};

// True counts plus i.i.d. Gaussian noise at L2 sensitivity sqrt(2)
// (replace-one: one changed row moves two cells by 1), then projection.
NoisyMarginal measure_marginal(const Dataset& data,
                               std::vector<std::size_t> columns, Budget budget,
                               BudgetLedger& ledger, Randomness& rng,
                               bool disable_noise = false);

// Empirical mutual information of two columns, in nats.
double pairwise_mutual_information(const Dataset& data, std::size_t u,
                                   std::size_t v);

// Sensitivity bound used for the mutual-information scores of the private
// tree selection: (2/n) ln(n) + 1/n under replace-one neighbors.
double mutual_information_sensitivity(std::size_t n);

// Greedy private spanning tree over the columns: at each step the
// exponential mechanism picks among cut-crossing edges, scored by empirical
// mutual information, at budget/(k-1) per step. One ledger entry covers the
// whole selection.
std::vector<std::pair<std::size_t, std::size_t>> select_tree(
    const Dataset& data, Budget budget, BudgetLedger& ledger, Randomness& rng,
    bool disable_noise = false);

// Iterative proportional scaling of each edge marginal toward the node
// marginals (max discrepancy < 1e-6 in count units, at most 500 sweeps).
TreeModel fit_tree(std::vector<NoisyMarginal> node_marginals,
                   std::vector<NoisyMarginal> edge_marginals,
                   std::vector<std::pair<std::size_t, std::size_t>> edges,
                   const Schema& schema);

// Ancestral sampling: component roots from their node marginals, children
// from the edge conditionals; a zero-mass conditional row falls back to the
// child's node marginal.
Dataset sample_tree(const TreeModel& model, std::size_t n_rows,
                    Randomness& rng);

struct MstOptions {
  double delta = 1e-5;
  // Fractions of epsilon spent on node measurement, tree selection, and edge
  // measurement; must sum to 1.
  double node_fraction = 1.0 / 3.0;
  double select_fraction = 1.0 / 3.0;
  double edge_fraction = 1.0 / 3.0;
  bool disable_noise = false;
};

// Full pipeline: measure 1-way marginals (Gaussian, stacked sensitivity
// sqrt(2k)), select a tree, measure its 2-way marginals (stacked sensitivity
// sqrt(2(k-1))), calibrate, sample. The ledger shows the (epsilon, delta)
// total as three labeled sub-spends; delta is split evenly over the two
// Gaussian phases.
Dataset mst_synthesize(const Dataset& data, double epsilon,
                       const MstOptions& options, BudgetLedger& ledger,
                       Randomness& rng, std::size_t n_rows = 0);

// Same pipeline, stopping before sampling; used to audit measured marginals.
TreeModel mst_fit(const Dataset& data, double epsilon,
                  const MstOptions& options, BudgetLedger& ledger,
                  Randomness& rng);

}  // namespace fairsynth

#endif  // FAIRSYNTH_MST_HPP_
