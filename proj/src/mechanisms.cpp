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

#include "fairsynth/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fairsynth {

double laplace_noise(double sensitivity, double epsilon, Randomness& rng) {
  if (!(sensitivity > 0.0)) throw Error("laplace_noise: sensitivity must be > 0");
  if (!(epsilon > 0.0)) throw Error("laplace_noise: epsilon must be > 0");
  return rng.laplace(sensitivity / epsilon);
}

double gaussian_sigma(double sensitivity, const Budget& budget) {
  if (!(sensitivity > 0.0)) throw Error("gaussian_sigma: sensitivity must be > 0");
  if (!(budget.epsilon > 0.0)) throw Error("gaussian_sigma: epsilon must be > 0");
  if (!(budget.delta > 0.0)) {
    throw Error("gaussian_sigma: the Gaussian mechanism requires delta > 0");
  }
  return sensitivity * std::sqrt(2.0 * std::log(1.25 / budget.delta)) /
         budget.epsilon;
}

double gaussian_noise(double sigma, Randomness& rng) {
  if (!(sigma > 0.0)) throw Error("gaussian_noise: sigma must be > 0");
  return sigma * rng.normal();
}

std::size_t exponential_select(std::span<const double> scores,
                               double sensitivity, double epsilon,
                               Randomness& rng) {
  if (scores.empty()) throw Error("exponential_select: empty score vector");
  if (!(sensitivity > 0.0)) {
    throw Error("exponential_select: sensitivity must be > 0");
  }
  if (!(epsilon > 0.0)) throw Error("exponential_select: epsilon must be > 0");
  double max_score = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    if (std::isnan(s)) throw Error("exponential_select: NaN score");
    max_score = std::max(max_score, s);
  }
  if (std::isinf(max_score)) {
    throw Error("exponential_select: scores must be finite");
  }
  const double gain = epsilon / (2.0 * sensitivity);
  std::vector<double> cumulative(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    total += std::exp(gain * (scores[i] - max_score));
    cumulative[i] = total;
  }
  const double u = rng.uniform01() * total;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  if (idx >= scores.size()) idx = scores.size() - 1;
  return idx;
}

std::size_t argmax_select(std::span<const double> scores) {
  if (scores.empty()) throw Error("argmax_select: empty score vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace fairsynth
