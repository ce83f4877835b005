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

#include "fairsynth/mst.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairsynth/kernels.hpp"
#include "fairsynth/mechanisms.hpp"

namespace fairsynth {

namespace {

// Clip negatives, rescale to target mass. All-zero vectors (possible at very
// small epsilon) fall back to uniform.
void project_counts(std::vector<double>* counts, double target) {
  double sum = 0.0;
  for (double& c : *counts) {
    if (c < 0.0) c = 0.0;
    sum += c;
  }
  if (sum <= 0.0) {
    const double u = target / static_cast<double>(counts->size());
    std::fill(counts->begin(), counts->end(), u);
    return;
  }
  const double scale = target / sum;
  for (double& c : *counts) c *= scale;
}

NoisyMarginal noisy_counts(const Dataset& data,
                           std::vector<std::size_t> columns, double sigma,
                           Randomness& rng) {
  NoisyMarginal m;
  m.counts = kernels::count_marginal(data, columns);
  m.columns = std::move(columns);
  m.sigma = sigma;
  if (sigma > 0.0) {
    for (double& c : m.counts) c += gaussian_noise(sigma, rng);
  }
  project_counts(&m.counts, static_cast<double>(data.row_count()));
  return m;
}

double marginal_sum(const NoisyMarginal& m) {
  return std::accumulate(m.counts.begin(), m.counts.end(), 0.0);
}

}  // namespace

NoisyMarginal measure_marginal(const Dataset& data,
                               std::vector<std::size_t> columns, Budget budget,
                               BudgetLedger& ledger, Randomness& rng,
                               bool disable_noise) {
  if (columns.empty() || columns.size() > 2) {
    throw Error("measure_marginal: takes 1 or 2 columns");
  }
  std::string label = "gaussian-marginal(";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    label += (i ? "," : "") + data.schema().columns().at(columns[i]).name;
  }
  label += ")";
  ledger.spend(std::move(label), budget);
  const double sigma =
      disable_noise ? 0.0 : gaussian_sigma(std::sqrt(2.0), budget);
  return noisy_counts(data, std::move(columns), sigma, rng);
}

double pairwise_mutual_information(const Dataset& data, std::size_t u,
                                   std::size_t v) {
  if (u == v) throw Error("mutual information: columns must differ");
  const std::size_t cols[2] = {u, v};
  const std::vector<double> joint =
      kernels::count_marginal(data, std::span<const std::size_t>(cols, 2));
  const std::uint32_t card_u = data.schema().columns()[u].cardinality;
  const std::uint32_t card_v = data.schema().columns()[v].cardinality;
  const double n = static_cast<double>(data.row_count());
  if (n == 0.0) return 0.0;

  std::vector<double> pu(card_u, 0.0), pv(card_v, 0.0);
  for (std::uint32_t a = 0; a < card_u; ++a) {
    for (std::uint32_t b = 0; b < card_v; ++b) {
      pu[a] += joint[a * card_v + b];
      pv[b] += joint[a * card_v + b];
    }
  }
  double mi = 0.0;
  for (std::uint32_t a = 0; a < card_u; ++a) {
    for (std::uint32_t b = 0; b < card_v; ++b) {
      const double c = joint[a * card_v + b];
      if (c <= 0.0) continue;
      mi += (c / n) * std::log((c * n) / (pu[a] * pv[b]));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double mutual_information_sensitivity(std::size_t n) {
  if (n < 2) return 1.0;
  const double nd = static_cast<double>(n);
  return (2.0 / nd) * std::log(nd) + 1.0 / nd;
}

std::vector<std::pair<std::size_t, std::size_t>> select_tree(
    const Dataset& data, Budget budget, BudgetLedger& ledger, Randomness& rng,
    bool disable_noise) {
  const std::size_t k = data.schema().column_count();
  if (k < 2) throw Error("select_tree: needs at least 2 columns");
  ledger.spend("tree-select", budget);

  // All pairwise scores up front; the data never changes during selection.
  std::vector<std::vector<double>> mi(k, std::vector<double>(k, 0.0));
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) {
      mi[u][v] = mi[v][u] = pairwise_mutual_information(data, u, v);
    }
  }

  const double eps_step = budget.epsilon / static_cast<double>(k - 1);
  const double sensitivity = mutual_information_sensitivity(data.row_count());

  std::vector<bool> in_tree(k, false);
  in_tree[0] = true;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(k - 1);
  while (edges.size() < k - 1) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    std::vector<double> scores;
    for (std::size_t u = 0; u < k; ++u) {
      if (!in_tree[u]) continue;
      for (std::size_t v = 0; v < k; ++v) {
        if (in_tree[v]) continue;
        candidates.emplace_back(u, v);
        scores.push_back(mi[u][v]);
      }
    }
    const std::size_t pick =
        disable_noise || candidates.size() == 1
            ? argmax_select(scores)
            : exponential_select(scores, sensitivity, eps_step, rng);
    const auto [u, v] = candidates[pick];
    in_tree[v] = true;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

void check_forest(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                  std::size_t k) {
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) {
    if (u >= k || v >= k || u == v) throw Error("fit_tree: bad edge");
    const std::size_t ru = find(u), rv = find(v);
    if (ru == rv) throw Error("fit_tree: edges contain a cycle");
    parent[ru] = rv;
  }
}

}  // namespace

TreeModel fit_tree(std::vector<NoisyMarginal> node_marginals,
                   std::vector<NoisyMarginal> edge_marginals,
                   std::vector<std::pair<std::size_t, std::size_t>> edges,
                   const Schema& schema) {
  const std::size_t k = schema.column_count();
  if (node_marginals.size() != k) {
    throw Error("fit_tree: need one node marginal per column");
  }
  if (edge_marginals.size() != edges.size()) {
    throw Error("fit_tree: edge marginal / edge count mismatch");
  }
  check_forest(edges, k);

  const double n = marginal_sum(node_marginals[0]);
  for (const NoisyMarginal& m : node_marginals) {
    if (std::abs(marginal_sum(m) - n) > 1e-6) {
      throw Error("fit_tree: node marginals disagree on total mass");
    }
    for (double c : m.counts) {
      if (c < 0.0) throw Error("fit_tree: marginals must be non-negative");
    }
  }

  constexpr int kMaxSweeps = 500;
  constexpr double kTol = 1e-6;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const std::size_t rows = schema.columns()[u].cardinality;
    const std::size_t cols = schema.columns()[v].cardinality;
    std::vector<double>& m = edge_marginals[e].counts;
    if (m.size() != rows * cols) {
      throw Error("fit_tree: edge marginal has wrong shape");
    }
    const std::vector<double>& tu = node_marginals[u].counts;
    const std::vector<double>& tv = node_marginals[v].counts;

    double residual = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      // Rows toward the u marginal.
      for (std::size_t a = 0; a < rows; ++a) {
        double rs = 0.0;
        for (std::size_t b = 0; b < cols; ++b) rs += m[a * cols + b];
        if (tu[a] <= 0.0) {
          for (std::size_t b = 0; b < cols; ++b) m[a * cols + b] = 0.0;
        } else if (rs <= 0.0) {
          const double fill = tu[a] / static_cast<double>(cols);
          for (std::size_t b = 0; b < cols; ++b) m[a * cols + b] = fill;
        } else {
          const double s = tu[a] / rs;
          for (std::size_t b = 0; b < cols; ++b) m[a * cols + b] *= s;
        }
      }
      // Columns toward the v marginal.
      for (std::size_t b = 0; b < cols; ++b) {
        double cs = 0.0;
        for (std::size_t a = 0; a < rows; ++a) cs += m[a * cols + b];
        if (tv[b] <= 0.0) {
          for (std::size_t a = 0; a < rows; ++a) m[a * cols + b] = 0.0;
        } else if (cs <= 0.0) {
          const double fill = tv[b] / static_cast<double>(rows);
          for (std::size_t a = 0; a < rows; ++a) m[a * cols + b] = fill;
        } else {
          const double s = tv[b] / cs;
          for (std::size_t a = 0; a < rows; ++a) m[a * cols + b] *= s;
        }
      }
      // Residual against both endpoints.
      residual = 0.0;
      for (std::size_t a = 0; a < rows; ++a) {
        double rs = 0.0;
        for (std::size_t b = 0; b < cols; ++b) rs += m[a * cols + b];
        residual = std::max(residual, std::abs(rs - tu[a]));
      }
      for (std::size_t b = 0; b < cols; ++b) {
        double cs = 0.0;
        for (std::size_t a = 0; a < rows; ++a) cs += m[a * cols + b];
        residual = std::max(residual, std::abs(cs - tv[b]));
      }
      if (residual < kTol) break;
    }
    if (residual >= kTol) {
      throw Error(detail::concat(
          "fit_tree: calibration of edge (", u, ",", v,
          ") did not converge within 500 sweeps; residual ", residual));
    }
  }

  TreeModel model{schema, std::move(edges), std::move(node_marginals),
                  std::move(edge_marginals), n};
  return model;
}

namespace {

std::size_t sample_categorical(std::span<const double> weights,
                               Randomness& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = rng.uniform01() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return weights.size() - 1;
}

}  // namespace

Dataset sample_tree(const TreeModel& model, std::size_t n_rows,
                    Randomness& rng) {
  if (n_rows < 1) throw Error("sample_tree: n_rows must be >= 1");
  const Schema& schema = model.schema;
  const std::size_t k = schema.column_count();

  // Adjacency with the owning edge index; BFS order from the smallest column
  // of each component so traversal (and therefore the stream) is fixed.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(k);
  for (std::size_t e = 0; e < model.edges.size(); ++e) {
    adj[model.edges[e].first].emplace_back(model.edges[e].second, e);
    adj[model.edges[e].second].emplace_back(model.edges[e].first, e);
  }
  struct Step {
    std::size_t column;
    std::size_t parent;      // k = none (component root)
    std::size_t edge_index;  // valid when parent != k
  };
  std::vector<Step> plan;
  std::vector<bool> visited(k, false);
  for (std::size_t root = 0; root < k; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> queue{root};
    visited[root] = true;
    plan.push_back({root, k, 0});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t u = queue[qi];
      for (const auto& [v, e] : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        plan.push_back({v, u, e});
        queue.push_back(v);
      }
    }
  }

  std::vector<std::uint32_t> flat(n_rows * k);
  for (std::size_t r = 0; r < n_rows; ++r) {
    std::uint32_t* row = flat.data() + r * k;
    for (const Step& step : plan) {
      const std::size_t v = step.column;
      if (step.parent == k) {
        row[v] = static_cast<std::uint32_t>(
            sample_categorical(model.node_marginals[v].counts, rng));
        continue;
      }
      const auto& edge = model.edges[step.edge_index];
      const NoisyMarginal& em = model.edge_marginals[step.edge_index];
      const std::size_t card_second =
          schema.columns()[edge.second].cardinality;
      const std::uint32_t parent_code = row[step.parent];
      std::vector<double> cond;
      if (edge.first == step.parent) {
        // Conditional over edge.second given first: one stored row.
        cond.assign(em.counts.begin() + parent_code * card_second,
                    em.counts.begin() + (parent_code + 1) * card_second);
      } else {
        // Parent is edge.second; take the column slice.
        const std::size_t card_first = schema.columns()[edge.first].cardinality;
        cond.resize(card_first);
        for (std::size_t a = 0; a < card_first; ++a) {
          cond[a] = em.counts[a * card_second + parent_code];
        }
      }
      double mass = 0.0;
      for (double c : cond) mass += c;
      if (mass <= 0.0) {
        // Zero-mass conditional: fall back to the child's node marginal.
        row[v] = static_cast<std::uint32_t>(
            sample_categorical(model.node_marginals[v].counts, rng));
      } else {
        row[v] = static_cast<std::uint32_t>(sample_categorical(cond, rng));
      }
    }
  }
  return Dataset(schema, std::move(flat), {"synthetic"});
}

TreeModel mst_fit(const Dataset& data, double epsilon,
                  const MstOptions& options, BudgetLedger& ledger,
                  Randomness& rng) {
  if (!(epsilon > 0.0)) throw Error("mst: epsilon must be > 0");
  const double frac_sum = options.node_fraction + options.select_fraction +
                          options.edge_fraction;
  if (std::abs(frac_sum - 1.0) > 1e-9) {
    throw Error("mst: phase fractions must sum to 1");
  }
  const Schema& schema = data.schema();
  const std::size_t k = schema.column_count();

  // Phase 1: all 1-way marginals as one stacked Gaussian query. One changed
  // row moves two cells in each of the k marginals, so the stacked L2
  // sensitivity is sqrt(2k).
  const Budget node_budget(options.node_fraction * epsilon,
                           options.delta / 2.0);
  ledger.spend("mst/node-marginals", node_budget);
  const double sigma_node =
      options.disable_noise
          ? 0.0
          : gaussian_sigma(std::sqrt(2.0 * static_cast<double>(k)),
                           node_budget);
  std::vector<NoisyMarginal> nodes;
  nodes.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    nodes.push_back(noisy_counts(data, {c}, sigma_node, rng));
  }

  // Phase 2: private tree selection.
  const Budget select_budget(options.select_fraction * epsilon, 0.0);
  BudgetLedger select_ledger(select_budget);
  auto edges =
      select_tree(data, select_budget, select_ledger, rng,
                  options.disable_noise);
  ledger.spend("mst/tree-select", select_budget);

  // Phase 3: the k-1 tree-edge marginals, stacked the same way.
  const Budget edge_budget(options.edge_fraction * epsilon,
                           options.delta / 2.0);
  ledger.spend("mst/edge-marginals", edge_budget);
  const double sigma_edge =
      options.disable_noise
          ? 0.0
          : gaussian_sigma(std::sqrt(2.0 * static_cast<double>(k - 1)),
                           edge_budget);
  std::vector<NoisyMarginal> edge_marginals;
  edge_marginals.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    edge_marginals.push_back(noisy_counts(data, {u, v}, sigma_edge, rng));
  }

  return fit_tree(std::move(nodes), std::move(edge_marginals),
                  std::move(edges), schema);
}

Dataset mst_synthesize(const Dataset& data, double epsilon,
                       const MstOptions& options, BudgetLedger& ledger,
                       Randomness& rng, std::size_t n_rows) {
  const TreeModel model = mst_fit(data, epsilon, options, ledger, rng);
  const std::size_t rows = n_rows == 0 ? data.row_count() : n_rows;
  return sample_tree(model, rows, rng);
}

}  // namespace fairsynth
