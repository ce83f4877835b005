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

#include "fairsynth/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "fairsynth/kernels.hpp"
#include "fairsynth/parallel.hpp"

namespace fairsynth {

HistogramDistribution::HistogramDistribution(Schema schema)
    : schema_(std::move(schema)) {
  const std::uint64_t cells = schema_.domain_size();
  weights_.assign(static_cast<std::size_t>(cells),
                  1.0 / static_cast<double>(cells));
}

double HistogramDistribution::query_mass(const MarginalQuery& q) const {
  validate_query(q, schema_);
  const kernels::CellMask mask =
      kernels::make_cell_mask(schema_, q.columns, q.cell);
  return kernels::masked_sum(weights_, mask);
}

void HistogramDistribution::multiplicative_update(const MarginalQuery& q,
                                                  double log_factor) {
  validate_query(q, schema_);
  const kernels::CellMask mask =
      kernels::make_cell_mask(schema_, q.columns, q.cell);
  const double total =
      kernels::scale_members(weights_, mask, std::exp(log_factor));
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error("histogram: weights degenerated during update");
  }
  kernels::scale_all(weights_, 1.0 / total);
}

void HistogramDistribution::normalize() {
  const double total =
      par::block_sum(weights_.size(), [&](std::size_t i) { return weights_[i]; });
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error("histogram: cannot normalize zero or non-finite mass");
  }
  kernels::scale_all(weights_, 1.0 / total);
}

double HistogramDistribution::max_weight_error() const {
  const double total =
      par::block_sum(weights_.size(), [&](std::size_t i) { return weights_[i]; });
  return std::abs(1.0 - total);
}

double evaluate_query_on_dist(const MarginalQuery& q,
                              const HistogramDistribution& dist,
                              std::size_t n) {
  return static_cast<double>(n) * dist.query_mass(q);
}

Dataset sample_synthetic(const HistogramDistribution& dist,
                         std::size_t n_rows, Randomness& rng) {
  if (n_rows < 1) throw Error("sample_synthetic: n_rows must be >= 1");
  const std::span<const double> w = dist.weights();
  std::vector<double> cdf(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    cdf[i] = acc;
  }
  const double total = acc;

  const Schema& schema = dist.schema();
  const std::size_t width = schema.column_count();
  std::vector<std::uint32_t> flat;
  flat.reserve(n_rows * width);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const double u = rng.uniform01() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= w.size()) idx = w.size() - 1;
    const auto codes = decode_cell(schema, idx);
    flat.insert(flat.end(), codes.begin(), codes.end());
  }
  return Dataset(schema, std::move(flat), {"synthetic"});
}

}  // namespace fairsynth
