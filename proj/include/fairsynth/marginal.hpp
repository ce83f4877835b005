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

#ifndef FAIRSYNTH_MARGINAL_HPP_
#define FAIRSYNTH_MARGINAL_HPP_

#include <cstdint>
#include <vector>

#include "fairsynth/rng.hpp"
#include "fairsynth/schema.hpp"

namespace fairsynth {

// One counting query: how many rows take exactly these codes on these
// columns. Column indices are kept strictly increasing.
struct MarginalQuery {
  std::vector<std::size_t> columns;
  std::vector<std::uint32_t> cell;

  bool operator==(const MarginalQuery&) const = default;
};

struct Workload {
  std::vector<MarginalQuery> queries;
};

// Workload composition: every 1-way marginal cell is mandatory; 2-way (and,
// for max_way = 3, 3-way) marginals are added for uniformly sampled column
// tuples, whole marginals at a time, until budget_cap queries are reached.
// Deterministic given the rng seed.
Workload build_workload(const Schema& schema, int max_way, Randomness& rng,
                        std::size_t budget_cap);

// Exact count of rows matching the query.
std::size_t evaluate_query(const MarginalQuery& q, const Dataset& data);

void validate_query(const MarginalQuery& q, const Schema& schema);

}  // namespace fairsynth

#endif  // FAIRSYNTH_MARGINAL_HPP_
