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

#include "fairsynth/kernels.hpp"

#include <cmath>

#include "fairsynth/parallel.hpp"

namespace fairsynth::kernels {

CellMask make_cell_mask(const Schema& schema,
                        std::span<const std::size_t> columns,
                        std::span<const std::uint32_t> cell) {
  if (columns.size() != cell.size()) {
    throw Error("cell mask: column/code length mismatch");
  }
  const auto strides = domain_strides(schema);
  CellMask mask;
  mask.terms.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::size_t c = columns[i];
    if (c >= schema.column_count()) {
      throw Error(detail::concat("cell mask: column index ", c, " out of range"));
    }
    const std::uint32_t card = schema.columns()[c].cardinality;
    if (cell[i] >= card) {
      throw Error(detail::concat("cell mask: code ", cell[i],
                                 " out of range for column '",
                                 schema.columns()[c].name, "'"));
    }
    mask.terms.push_back({strides[c], card, cell[i]});
  }
  return mask;
}

double masked_sum(std::span<const double> weights, const CellMask& mask) {
  return par::block_sum(weights.size(), [&](std::size_t i) {
    return mask.contains(i) ? weights[i] : 0.0;
  });
}

double masked_sum_serial(std::span<const double> weights,
                         const CellMask& mask) {
  return par::block_sum_serial(weights.size(), [&](std::size_t i) {
    return mask.contains(i) ? weights[i] : 0.0;
  });
}

double scale_members(std::span<double> weights, const CellMask& mask,
                     double factor) {
  par::for_each(weights.size(), [&](std::size_t i) {
    if (mask.contains(i)) weights[i] *= factor;
  });
  return par::block_sum(weights.size(),
                        [&](std::size_t i) { return weights[i]; });
}

double scale_members_serial(std::span<double> weights, const CellMask& mask,
                            double factor) {
  par::for_each_serial(weights.size(), [&](std::size_t i) {
    if (mask.contains(i)) weights[i] *= factor;
  });
  return par::block_sum_serial(weights.size(),
                               [&](std::size_t i) { return weights[i]; });
}

void scale_all(std::span<double> weights, double s) {
  par::for_each(weights.size(), [&](std::size_t i) { weights[i] *= s; });
}

void scale_all_serial(std::span<double> weights, double s) {
  par::for_each_serial(weights.size(), [&](std::size_t i) { weights[i] *= s; });
}

namespace {

struct MarginalLayout {
  std::vector<std::uint64_t> strides;  // per requested column, sub-domain
  std::size_t cells = 1;
};

MarginalLayout marginal_layout(const Schema& schema,
                               std::span<const std::size_t> columns) {
  MarginalLayout layout;
  layout.strides.resize(columns.size());
  std::uint64_t s = 1;
  for (std::size_t i = columns.size(); i-- > 0;) {
    if (columns[i] >= schema.column_count()) {
      throw Error("count_marginal: column index out of range");
    }
    layout.strides[i] = s;
    s *= schema.columns()[columns[i]].cardinality;
  }
  layout.cells = static_cast<std::size_t>(s);
  return layout;
}

template <bool Parallel>
std::vector<double> count_marginal_impl(const Dataset& data,
                                        std::span<const std::size_t> columns) {
  const MarginalLayout layout = marginal_layout(data.schema(), columns);
  const std::size_t n = data.row_count();
  std::vector<std::uint64_t> counts(layout.cells, 0);

  auto cell_of = [&](std::size_t row) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      idx += data.at(row, columns[i]) * layout.strides[i];
    }
    return idx;
  };

  if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(layout.cells, 0);
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        local[cell_of(static_cast<std::size_t>(i))] += 1;
      }
#pragma omp critical
      {
        for (std::size_t c = 0; c < layout.cells; ++c) counts[c] += local[c];
      }
    }
#else
    for (std::size_t i = 0; i < n; ++i) counts[cell_of(i)] += 1;
#endif
  } else {
    for (std::size_t i = 0; i < n; ++i) counts[cell_of(i)] += 1;
  }

  std::vector<double> out(layout.cells);
  for (std::size_t c = 0; c < layout.cells; ++c) {
    out[c] = static_cast<double>(counts[c]);
  }
  return out;
}

// Numerically stable log(1 + exp(z)).
inline double log1pexp(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

inline double sigmoid(double z) {
  return z >= 0 ? 1.0 / (1.0 + std::exp(-z))
                : std::exp(z) / (1.0 + std::exp(z));
}

template <bool Parallel>
double logreg_impl(std::span<const double> x, std::size_t n, std::size_t d,
                   std::span<const double> y, std::span<const double> params,
                   double lambda, std::span<double> grad) {
  if (params.size() != d + 1 || grad.size() != d + 1) {
    throw Error("logreg kernel: params/grad must have length d + 1");
  }
  // One pass accumulates [grad_w (d), grad_b, loss] per row block.
  const std::size_t dim = d + 2;
  std::vector<double> acc(dim);
  auto accumulate = [&](std::size_t i, double* local) {
    const double* row = x.data() + i * d;
    double z = params[d];
    for (std::size_t j = 0; j < d; ++j) z += row[j] * params[j];
    const double p = sigmoid(z);
    const double r = p - y[i];
    for (std::size_t j = 0; j < d; ++j) local[j] += r * row[j];
    local[d] += r;
    local[d + 1] += log1pexp(z) - y[i] * z;
  };
  if constexpr (Parallel) {
    par::block_vector_sum(n, dim, acc.data(), accumulate);
  } else {
    par::block_vector_sum_serial(n, dim, acc.data(), accumulate);
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  double penalty = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    grad[j] = acc[j] * inv_n + lambda * params[j];
    penalty += params[j] * params[j];
  }
  grad[d] = acc[d] * inv_n;  // intercept unpenalized
  return acc[d + 1] * inv_n + 0.5 * lambda * penalty;
}

}  // namespace

std::vector<double> count_marginal(const Dataset& data,
                                   std::span<const std::size_t> columns) {
  return count_marginal_impl<true>(data, columns);
}

std::vector<double> count_marginal_serial(
    const Dataset& data, std::span<const std::size_t> columns) {
  return count_marginal_impl<false>(data, columns);
}

double logreg_objective_gradient(std::span<const double> x, std::size_t n,
                                 std::size_t d, std::span<const double> y,
                                 std::span<const double> params, double lambda,
                                 std::span<double> grad) {
  return logreg_impl<true>(x, n, d, y, params, lambda, grad);
}

double logreg_objective_gradient_serial(std::span<const double> x,
                                        std::size_t n, std::size_t d,
                                        std::span<const double> y,
                                        std::span<const double> params,
                                        double lambda, std::span<double> grad) {
  return logreg_impl<false>(x, n, d, y, params, lambda, grad);
}

}  // namespace fairsynth::kernels
