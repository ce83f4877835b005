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

#include "fairsynth/marginal.hpp"

#include <algorithm>

namespace fairsynth {

void validate_query(const MarginalQuery& q, const Schema& schema) {
  if (q.columns.empty()) throw Error("marginal query: no columns");
  if (q.columns.size() != q.cell.size()) {
    throw Error("marginal query: column/cell length mismatch");
  }
  if (!std::is_sorted(q.columns.begin(), q.columns.end()) ||
      std::adjacent_find(q.columns.begin(), q.columns.end()) !=
          q.columns.end()) {
    throw Error("marginal query: columns must be strictly increasing");
  }
  for (std::size_t i = 0; i < q.columns.size(); ++i) {
    if (q.columns[i] >= schema.column_count()) {
      throw Error(detail::concat("marginal query: column index ",
                                 q.columns[i], " out of range"));
    }
    if (q.cell[i] >= schema.columns()[q.columns[i]].cardinality) {
      throw Error(detail::concat("marginal query: code ", q.cell[i],
                                 " out of range for column '",
                                 schema.columns()[q.columns[i]].name, "'"));
    }
  }
}

std::size_t evaluate_query(const MarginalQuery& q, const Dataset& data) {
  validate_query(q, data.schema());
  std::size_t count = 0;
  for (std::size_t i = 0; i < data.row_count(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < q.columns.size(); ++j) {
      if (data.at(i, q.columns[j]) != q.cell[j]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

namespace {

// All cells of one marginal over the given columns, appended to out.
void append_marginal_cells(const Schema& schema,
                           std::vector<std::size_t> columns,
                           std::vector<MarginalQuery>* out) {
  std::size_t cells = 1;
  for (std::size_t c : columns) cells *= schema.columns()[c].cardinality;
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rest = flat;
    std::vector<std::uint32_t> cell(columns.size());
    for (std::size_t i = columns.size(); i-- > 0;) {
      const std::uint32_t card = schema.columns()[columns[i]].cardinality;
      cell[i] = static_cast<std::uint32_t>(rest % card);
      rest /= card;
    }
    out->push_back(MarginalQuery{columns, std::move(cell)});
  }
}

std::size_t marginal_cell_count(const Schema& schema,
                                const std::vector<std::size_t>& columns) {
  std::size_t cells = 1;
  for (std::size_t c : columns) cells *= schema.columns()[c].cardinality;
  return cells;
}

}  // namespace

Workload build_workload(const Schema& schema, int max_way, Randomness& rng,
                        std::size_t budget_cap) {
  if (max_way < 1 || max_way > 3) {
    throw Error("build_workload: max_way must be 1, 2, or 3");
  }
  const std::size_t k = schema.column_count();
  std::size_t mandatory = 0;
  for (const Column& c : schema.columns()) mandatory += c.cardinality;
  if (budget_cap < mandatory) {
    throw Error(detail::concat("build_workload: cap ", budget_cap,
                               " is below the mandatory 1-way query count ",
                               mandatory));
  }

  Workload w;
  for (std::size_t c = 0; c < k; ++c) {
    append_marginal_cells(schema, {c}, &w.queries);
  }

  auto add_tuples = [&](std::vector<std::vector<std::size_t>> tuples) {
    // Uniform order via deterministic Fisher-Yates, whole marginals only.
    for (std::size_t i = tuples.size(); i-- > 1;) {
      std::swap(tuples[i], tuples[rng.uniform_index(i + 1)]);
    }
    for (auto& t : tuples) {
      if (w.queries.size() + marginal_cell_count(schema, t) > budget_cap) {
        continue;
      }
      append_marginal_cells(schema, t, &w.queries);
    }
  };

  if (max_way >= 2) {
    std::vector<std::vector<std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) pairs.push_back({a, b});
    }
    add_tuples(std::move(pairs));
  }
  if (max_way >= 3) {
    std::vector<std::vector<std::size_t>> triples;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::size_t c = b + 1; c < k; ++c) triples.push_back({a, b, c});
      }
    }
    add_tuples(std::move(triples));
  }
  return w;
}

}  // namespace fairsynth
